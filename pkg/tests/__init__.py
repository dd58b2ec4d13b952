"""Tests for satlab."""
