"""Tests for Helix Lab."""
