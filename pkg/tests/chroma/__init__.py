"""Tests for coloring models, verifiers and file formats."""
