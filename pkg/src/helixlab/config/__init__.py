"""Configuration module for Helix Lab."""

from helixlab.config.settings import Settings, get_settings

__all__ = ["Settings", "get_settings"]
