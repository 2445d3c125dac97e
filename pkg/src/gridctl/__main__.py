# gridctl
# Released under the LGPLv3 License

import sys

from .cli import main

sys.exit(main())
