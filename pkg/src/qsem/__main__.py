import sys

from qsem.cli import main

sys.exit(main())
