"""
Unit tests for utils module (PalindromicDensityError hierarchy, formatting)
"""