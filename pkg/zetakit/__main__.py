import sys

from zetakit.cli import main

sys.exit(main())
