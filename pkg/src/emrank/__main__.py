"""Allow `python -m emrank` as an alias for the console script."""

from .cli import entry

entry()
