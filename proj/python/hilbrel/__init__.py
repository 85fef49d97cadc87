"""Exact cohomology of Hilbert schemes of curves on surfaces."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
