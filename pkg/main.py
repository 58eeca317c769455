#!/usr/bin/env python3
"""Main entry point for Helix Lab.

This file allows running the application directly with:
    uv run python main.py

For full CLI usage, use:
    uv run helixlab --help
"""

from helixlab.cli import cli

if __name__ == "__main__":
    cli()
