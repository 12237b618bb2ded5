"""Finite higher-dimensional transition systems."""

from ._hdts import *  # noqa: F401,F403
from ._hdts import __doc__  # noqa: F401
