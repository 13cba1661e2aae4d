"""Selection of the limb-kernel backend.

Two interchangeable kernel modules exist: a numba-compiled one (the
default) and a pure numpy/Python one.  The environment variable
TOKADD_BACKEND picks the default for the process:

    auto   use numba if it imports, else fall back to numpy (default)
    numba  require the compiled kernels
    numpy  force the fallback kernels

Call sites may also pass an explicit backend name to override the
environment for a single call.
"""
from __future__ import annotations

import importlib
import os
import warnings

ENV_VAR = "TOKADD_BACKEND"
BACKENDS = ("numba", "numpy")

_modules: dict = {}
_warned_fallback = False


def default_backend() -> str:
    """Resolve the backend chosen by the environment."""
    global _warned_fallback
    choice = os.environ.get(ENV_VAR, "auto").strip().lower()
    if choice in ("", "auto"):
        try:
            import numba  # noqa: F401
        except ImportError:
            if not _warned_fallback:
                warnings.warn(
                    "numba unavailable, using the pure numpy kernels",
                    RuntimeWarning,
                    stacklevel=2,
                )
                _warned_fallback = True
            return "numpy"
        return "numba"
    if choice not in BACKENDS:
        raise ValueError(
            f"{ENV_VAR}={choice!r} is not one of 'auto', 'numba', 'numpy'"
        )
    return choice


def get_kernels(backend: str | None = None):
    """Return the kernel module for a backend name (None = default)."""
    name = backend if backend is not None else default_backend()
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}")
    mod = _modules.get(name)
    if mod is None:
        mod = importlib.import_module(f"tokadd._kernels_{name}")
        _modules[name] = mod
    return mod
