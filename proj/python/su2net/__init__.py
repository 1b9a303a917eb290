from ._su2net import *  # noqa: F401,F403
from ._su2net import __doc__  # noqa: F401
