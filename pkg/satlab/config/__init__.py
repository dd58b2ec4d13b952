"""Configuration package for satlab."""
