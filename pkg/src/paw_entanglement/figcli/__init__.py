"""Figure-data and verification command line."""

from paw_entanglement.figcli.main import main

__all__ = ["main"]
