"""Search-kernel backend selection.

Two interchangeable implementations of the hot exhaustive-search kernels
exist: ``pure`` (numpy) and ``compiled`` (Cython extension).  The compiled
backend is preferred when importable; ``RINGRANGE_BACKEND=pure|compiled``
overrides, and :func:`use` switches at runtime (handy for benchmarks and
for cross-checking the two implementations against each other).
"""
from __future__ import annotations

import os

from . import pure

try:  # pragma: no cover - depends on the build environment
    from . import _speedups
except ImportError:  # pragma: no cover
    _speedups = None

HAVE_SPEEDUPS = _speedups is not None

_active = None
_active_name = ""


def available() -> list[str]:
    return ["pure", "compiled"] if HAVE_SPEEDUPS else ["pure"]


def use(name: str = "auto") -> str:
    """Select the active backend; returns the name actually selected."""
    global _active, _active_name
    if name in ("auto", "", None):
        name = "compiled" if HAVE_SPEEDUPS else "pure"
    if name == "compiled":
        if not HAVE_SPEEDUPS:
            raise RuntimeError("compiled kernels are not available; rebuild the extension")
        _active = _speedups
    elif name == "pure":
        _active = pure
    else:
        raise ValueError(f"unknown backend {name!r}; expected auto, pure, or compiled")
    _active_name = name
    return name


def kern():
    """The currently selected backend module."""
    return _active


def active_name() -> str:
    return _active_name


def backend_module(name: str):
    """Fetch a specific backend without changing the active one."""
    if name == "pure":
        return pure
    if name == "compiled" and HAVE_SPEEDUPS:
        return _speedups
    raise ValueError(f"backend {name!r} unavailable")


use(os.environ.get("RINGRANGE_BACKEND", "auto"))
