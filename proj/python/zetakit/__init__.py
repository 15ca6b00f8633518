"""Riemann zeta evaluation, arithmetic functions and series-identity probes."""

from ._zetakit import *  # noqa: F401,F403
from ._zetakit import __doc__  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
