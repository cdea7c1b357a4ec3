import sys

from tetrotile.commands.cli import main

sys.exit(main())
