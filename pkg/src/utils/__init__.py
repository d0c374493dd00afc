"""Logging, configuration and exception helpers."""
