# gridctl
# Released under the LGPLv3 License

from .core import *
from .grid import *
from .plugins import plugin_report
from .plugins import plugin_diagram
from .plugins import plugin_batch_scan

__version__ = '0.1.0'
