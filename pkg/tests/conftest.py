"""Shared pytest configuration; makes ``oracles`` importable from tests."""
