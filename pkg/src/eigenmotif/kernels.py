"""Eigensolver backend selection.

Prefers the compiled Jacobi kernel, falling back to the numpy
implementation when the extension is missing.  EIGENMOTIF_BACKEND=python
(or =compiled) overrides the automatic choice.
"""

import os

_choice = os.environ.get("EIGENMOTIF_BACKEND", "auto").strip().lower()

if _choice in ("", "auto"):
    try:
        from ._kernels import jacobi_eigh

        BACKEND = "compiled"
    except ImportError:
        from ._kernels_py import jacobi_eigh

        BACKEND = "python"
elif _choice == "python":
    from ._kernels_py import jacobi_eigh

    BACKEND = "python"
elif _choice in ("compiled", "c", "cython"):
    from ._kernels import jacobi_eigh

    BACKEND = "compiled"
else:
    raise RuntimeError(f"unknown EIGENMOTIF_BACKEND value: {_choice!r}")

__all__ = ["jacobi_eigh", "BACKEND"]
