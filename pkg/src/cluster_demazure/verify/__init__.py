"""Closed forms of the cluster variables and end-to-end checkers."""

from .checks import *  # noqa: F401,F403
from .checks import __all__ as _checks_all
from .closed_forms import *  # noqa: F401,F403
from .closed_forms import __all__ as _cf_all

__all__ = list(_cf_all) + list(_checks_all)
