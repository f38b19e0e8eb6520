import sys

from paperfold.cli import main

sys.exit(main())
