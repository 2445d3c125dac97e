# gridctl
# Released under the LGPLv3 License

from .m010_grid_core import *
from .m020_grid_spectral import *
from .m030_grid_path import *
from .m040_grid_simple import *
from .m050_grid_symmetry import *
from .m060_grid_nonsimple import *
from .m070_grid_oracle import *
