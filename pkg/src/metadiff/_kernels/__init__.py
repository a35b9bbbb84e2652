"""Kernel backend selection.

The compiled Cython core is used when available; otherwise the numpy
fallback takes over. METADIFF_BACKEND=python|compiled forces the choice
(forcing "compiled" raises if the extension was not built).

Both backends are run-to-run deterministic and per-sample stable within a
batch, but they are not bit-identical to each other (different accumulation
orders); see tests/test_kernels.py for the tolerance contract.
"""

import os

_choice = os.environ.get("METADIFF_BACKEND", "").strip().lower()

if _choice == "python":
    from . import python_backend as _impl
elif _choice == "compiled":
    from . import compiled_backend as _impl
elif _choice:
    raise ValueError(f"METADIFF_BACKEND must be 'python' or 'compiled', got {_choice!r}")
else:
    try:
        from . import compiled_backend as _impl
    except ImportError:
        from . import python_backend as _impl

BACKEND = _impl.NAME
conv2d_forward = _impl.conv2d_forward
conv2d_grad_input = _impl.conv2d_grad_input
conv2d_grad_weight = _impl.conv2d_grad_weight
crc64 = _impl.crc64
