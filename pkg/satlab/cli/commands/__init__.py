"""Subcommands for the satlab CLI."""
