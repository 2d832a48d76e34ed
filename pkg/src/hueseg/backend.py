"""Kernel backend selection.

The hot per-pixel loops (hue binning, classification, median filtering) have
two interchangeable implementations: a compiled Cython extension
(:mod:`hueseg._kernels`) and a vectorized numpy fallback
(:mod:`hueseg._kernels_py`). The compiled one is picked at import when it is
built; ``HUESEG_BACKEND`` overrides the choice:

* ``auto`` (default): compiled if available, else numpy
* ``native``: compiled, ImportError if the extension is missing
* ``python``: always the numpy fallback

Both backends produce identical bins, flags and masks for the same input;
benchmarks/bench_backends.py compares their speed.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py


def _load(name: str) -> tuple[ModuleType, str]:
    if name == "python":
        return _kernels_py, "python"
    try:
        from . import _kernels  # type: ignore[attr-defined]

        return _kernels, "native"
    except ImportError:
        if name == "native":
            raise
        return _kernels_py, "python"


_impl, BACKEND = _load(os.environ.get("HUESEG_BACKEND", "auto"))

hue_field_kernel = _impl.hue_field_kernel
classify_kernel = _impl.classify_kernel
majority_filter_kernel = _impl.majority_filter_kernel


def available_backends() -> dict[str, ModuleType]:
    """All importable kernel modules, keyed by backend name."""
    out: dict[str, ModuleType] = {"python": _kernels_py}
    try:
        from . import _kernels  # type: ignore[attr-defined]

        out["native"] = _kernels
    except ImportError:
        pass
    return out
