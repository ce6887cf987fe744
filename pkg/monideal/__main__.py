import sys

from monideal.main import main

sys.exit(main())
