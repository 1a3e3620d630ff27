"""Module execution hook: ``python -m hardylab`` runs the CLI."""

from .cli import entrypoint

entrypoint()
