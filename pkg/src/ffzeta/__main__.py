import sys

from ffzeta.cli import main

sys.exit(main())
