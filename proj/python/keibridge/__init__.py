"""Kei coloring invariants of link, tangle and tri-plane diagrams."""

from ._keibridge import *  # noqa: F401,F403
from ._keibridge import __doc__  # noqa: F401
