"""
CLI flow integration tests

Tests for end-to-end command runs through main(argv):
- Happy path (pd, verify, grid, converge, profiles, sample output)
- Error handling (usage errors, caps, unwritable output, verification mismatch)
"""
