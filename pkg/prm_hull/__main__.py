import sys

from prm_hull.cli import main

sys.exit(main())
