"""Exact graded Lie algebra tables and braid identity checks."""

from glie._core import *  # noqa: F401,F403
from glie._core import __version__  # noqa: F401
