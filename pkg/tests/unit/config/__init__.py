"""
Unit tests for config module (Settings, MessageProvider, MessageKey)
"""