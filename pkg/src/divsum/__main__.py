import sys

from divsum.cli import main

sys.exit(main())
