import sys

from laxcat.toolkit.cli import main

sys.exit(main())
