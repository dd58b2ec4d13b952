"""Utility functions for satlab."""
