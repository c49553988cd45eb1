import sys

from runrich.cli import main

sys.exit(main())
