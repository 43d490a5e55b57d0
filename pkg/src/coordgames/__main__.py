import sys

from coordgames.cli import main

sys.exit(main())
