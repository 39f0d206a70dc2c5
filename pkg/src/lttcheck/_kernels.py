"""Kernel backend selection: compiled extension when built, pure Python otherwise.

Set LTTCHECK_BACKEND=python (or =compiled) to force a choice; library calls can
also pass an explicit backend name.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _speedups
except ImportError:  # extension not built
    _speedups = None

_ENV_VAR = "LTTCHECK_BACKEND"


def available_backends() -> tuple[str, ...]:
    return ("compiled", "python") if _speedups is not None else ("python",)


def default_backend() -> str:
    forced = os.environ.get(_ENV_VAR)
    if forced:
        if forced not in ("compiled", "python", "auto"):
            raise ValueError(f"{_ENV_VAR} must be 'compiled', 'python' or 'auto', got {forced!r}")
        if forced != "auto":
            if forced == "compiled" and _speedups is None:
                raise RuntimeError("compiled backend requested but the extension is not built")
            return forced
    return "compiled" if _speedups is not None else "python"


def get_backend(name: str | None = None):
    """Return the kernel module for ``name`` ('compiled', 'python', 'auto' or None)."""
    if name is None or name == "auto":
        name = default_backend()
    if name == "python":
        return _kernels_py
    if name == "compiled":
        if _speedups is None:
            raise RuntimeError("compiled backend requested but the extension is not built")
        return _speedups
    raise ValueError(f"unknown backend {name!r}")
