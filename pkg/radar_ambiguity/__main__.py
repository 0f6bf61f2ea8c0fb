"""Run the command-line interface with ``python -m radar_ambiguity``."""

from .cli import main

raise SystemExit(main())
