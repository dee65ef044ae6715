"""Tests for the constructive colorings."""
