"""
Test suite for the palindromic density toolkit
"""