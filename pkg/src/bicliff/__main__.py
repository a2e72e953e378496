import sys

from bicliff.cli import main

sys.exit(main())
