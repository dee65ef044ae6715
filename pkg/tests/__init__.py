"""Test suite for CayleyColor."""
