import sys

from gbx.cli import main

sys.exit(main())
