"""Command-line interface package for satlab."""
