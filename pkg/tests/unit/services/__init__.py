"""
Unit tests for service module (exact_core, oracle, sampler, verification, analysis)
"""