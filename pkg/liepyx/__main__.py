import sys

from liepyx.cli import main

sys.exit(main())
