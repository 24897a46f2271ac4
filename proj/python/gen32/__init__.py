import os as _os

_here = _os.path.dirname(__file__)
if "GEN32_DATA_DIR" not in _os.environ and _os.path.isdir(_os.path.join(_here, "data")):
    _os.environ["GEN32_DATA_DIR"] = _os.path.join(_here, "data")

from ._gen32 import *  # noqa: E402,F401,F403
from ._gen32 import __doc__  # noqa: E402,F401
