# gridctl
# Released under the LGPLv3 License

from .m010_core_util import *
from .m020_core_data_structures import *
from .m030_core_prefs import *
