"""Tests for the exact oracles."""
