"""
Unit tests for domain module (SpaceParams, Multiset, Profile, reports, Events)
"""