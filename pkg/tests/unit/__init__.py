"""
Unit tests package (domain, services, config, utils)
"""