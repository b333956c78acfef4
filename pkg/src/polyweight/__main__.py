"""Module entry point: ``python -m polyweight``."""

import sys

from .cli import main

sys.exit(main())
