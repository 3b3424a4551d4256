import sys

from chainbell.cli import main

sys.exit(main())
