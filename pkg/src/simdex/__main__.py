"""Allow ``python -m simdex``."""

import sys

from .cli import main

sys.exit(main())
