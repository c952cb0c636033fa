from __future__ import annotations

import sys

from orbitkit.main import main

sys.exit(main())
