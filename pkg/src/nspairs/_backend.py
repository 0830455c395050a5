"""Kernel dispatch: compiled int64 core when available, Python ints otherwise.

Set ``NSPAIRS_PURE_PYTHON=1`` to skip the compiled module, or switch at run
time with :func:`use_backend`.  Compiled calls that overflow int64 are
retried on the pure-Python path, so results never depend on the backend.
"""
import os
from contextlib import contextmanager

from nspairs import _pykernels

_compiled = None
if os.environ.get("NSPAIRS_PURE_PYTHON", "") in ("", "0"):
    try:
        from nspairs import _ckernels as _compiled
    except ImportError:
        _compiled = None

COMPILED = _compiled is not None
BACKEND = "cython" if COMPILED else "python"
_active = _compiled


def available_backends() -> tuple:
    return ("cython", "python") if COMPILED else ("python",)


def active_backend() -> str:
    return "cython" if _active is not None else "python"


@contextmanager
def use_backend(name: str):
    """Temporarily route kernel calls through the named backend."""
    global _active
    if name not in available_backends():
        raise ValueError(f"backend {name!r} is not available (have {available_backends()})")
    saved = _active
    _active = _compiled if name == "cython" else None
    try:
        yield
    finally:
        _active = saved


def det(rows):
    if _active is not None:
        try:
            return _active.det(rows)
        except OverflowError:
            pass
    return _pykernels.det(rows)


def pfaffian(rows):
    if _active is not None:
        try:
            return _active.pfaffian(rows)
        except OverflowError:
            pass
    return _pykernels.pfaffian(rows)


def smith_diagonal(rows, ncols):
    if _active is not None:
        try:
            return _active.smith_diagonal(rows, ncols)
        except OverflowError:
            pass
    return _pykernels.smith_diagonal(rows, ncols)
