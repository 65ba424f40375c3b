import sys

from hkdet.cli import main

sys.exit(main())
