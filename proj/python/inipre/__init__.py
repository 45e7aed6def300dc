"""Mixed-numerology OFDM simulation with transmitter-side INI pre-equalization.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from ._inipre import *  # noqa: F401,F403
from ._inipre import __version__  # noqa: F401
