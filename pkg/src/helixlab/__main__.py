"""Entry point for running helixlab as a module: python -m helixlab."""

from helixlab.cli import cli

if __name__ == "__main__":
    cli()
