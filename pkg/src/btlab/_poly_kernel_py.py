"""Pure-Python polynomial kernel.

Polynomials are dicts mapping a packed exponent key (one int, fixed bit
field per variable) to a nonzero integer coefficient, so adding two keys
adds all exponents at once.  This module is the fallback for the
compiled kernel in ``_poly_kernel.pyx``; both expose the same ``mul``.
"""

from __future__ import annotations

KERNEL_NAME = "python"


def mul(a: dict, b: dict) -> dict:
    """Multiply-accumulate of two packed-key polynomials."""
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            prev = get(k)
            if prev is None:
                out[k] = ca * cb
            else:
                out[k] = prev + ca * cb
    # signed coefficients can cancel
    return {k: c for k, c in out.items() if c}
