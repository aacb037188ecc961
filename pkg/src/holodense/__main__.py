import sys

from holodense.cli import main

sys.exit(main())
