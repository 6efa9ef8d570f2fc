from .decimal_natural import *
