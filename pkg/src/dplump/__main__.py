import sys

from dplump.cli import main

sys.exit(main())
