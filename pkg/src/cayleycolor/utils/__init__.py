"""Shared utilities for CayleyColor."""
