import sys

from progdisc.cli import main

sys.exit(main())
