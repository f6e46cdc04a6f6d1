"""Shared fixtures for the laxcat test suite."""
