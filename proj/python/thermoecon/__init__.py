"""Historical energy/GWP reconstruction and falsification toolkit.

Thin wrapper over the compiled extension; everything lives in ``_core``.
"""

from thermoecon._core import *  # noqa: F401,F403
from thermoecon._core import __doc__  # noqa: F401

__version__ = "0.1.0"
