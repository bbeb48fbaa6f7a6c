import sys

from jhsiao.toric.cli import main

sys.exit(main())
