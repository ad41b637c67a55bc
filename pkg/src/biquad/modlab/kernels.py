"""Backend selection for the module-lab kernels.

The compiled extension is used when it imports; ``BIQUAD_PURE_PYTHON=1``
forces the numpy fallback.
"""

import os

if os.environ.get("BIQUAD_PURE_PYTHON") == "1":
    from . import _core_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _core as _impl

        BACKEND = "cython"
    except ImportError:
        from . import _core_py as _impl

        BACKEND = "python"

qh90_check = _impl.qh90_check
kernel_equality = _impl.kernel_equality
implication = _impl.implication
end_involutions = _impl.end_involutions
orbit_labels = _impl.orbit_labels

__all__ = ["BACKEND", "qh90_check", "kernel_equality", "implication", "end_involutions", "orbit_labels"]
