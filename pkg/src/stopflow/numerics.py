"""Small numerical kernels: adaptive Simpson quadrature, bracketed
bisection, downward bracket scanning and isotonic (PAV) projection.

These are deliberately hand-rolled and deterministic; the quadrature
and root tolerances quoted by the higher-level modules are contracts
on these routines.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NumericalError

__all__ = [
    "adaptive_simpson",
    "bisect_root",
    "scan_down_bracket",
    "pav_nondecreasing",
]


def _simpson(fa, fm, fb, a, b):
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def adaptive_simpson(f, a, b, atol=1e-10, rtol=1e-12, max_depth=48):
    """Integrate f on [a, b] by adaptive Simpson with interval halving.

    Accepts an interval when |S_fine - S_coarse| <= 15 * (atol + rtol*|S|),
    returning the Richardson-corrected fine estimate.  The mixed
    absolute/relative tolerance keeps the contract meaningful when the
    integral is many orders of magnitude above 1 (float64 cannot honor
    a 1e-10 absolute tolerance on a 1e8-sized result).
    """
    if b == a:
        return 0.0
    m = 0.5 * (a + b)
    fa, fm, fb = f(a), f(m), f(b)
    whole = _simpson(fa, fm, fb, a, b)
    return _adapt(f, a, b, fa, fm, fb, whole, atol, rtol, max_depth)


def _adapt(f, a, b, fa, fm, fb, whole, atol, rtol, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = _simpson(fa, flm, fm, a, m)
    right = _simpson(fm, frm, fb, m, b)
    err = left + right - whole
    if abs(err) <= 15.0 * (atol + rtol * abs(left + right)):
        return left + right + err / 15.0
    if depth <= 0:
        raise NumericalError(
            f"adaptive Simpson failed to converge on [{a}, {b}] (residual {err:.3e})"
        )
    half = 0.5 * atol
    return (_adapt(f, a, m, fa, flm, fm, left, half, rtol, depth - 1)
            + _adapt(f, m, b, fm, frm, fb, right, half, rtol, depth - 1))


def bisect_root(f, lo, hi, xtol=1e-10, flo=None, fhi=None, max_iter=200):
    """Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.

    Returns the midpoint of the final bracket once its width is <= xtol.
    """
    flo = f(lo) if flo is None else flo
    fhi = f(hi) if fhi is None else fhi
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise NumericalError(
            f"bisection bracket [{lo}, {hi}] has no sign change (f={flo:.3e}, {fhi:.3e})"
        )
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= xtol:
            return mid
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    raise NumericalError(f"bisection did not reach xtol={xtol} on [{lo}, {hi}]")


def scan_down_bracket(f, hi, lo, f_hi=None, n_scan=256):
    """First sign-change bracket below ``hi``, scanning toward ``lo``.

    Used to isolate the *largest* root below hi: f(hi) must be negative
    and the scan walks down on a uniform grid until f turns >= 0.
    Returns (a, b, fa, fb) with a < b, f(a) >= 0 > f(b).  Raises when f
    stays negative all the way down to ``lo``.
    """
    f_hi = f(hi) if f_hi is None else f_hi
    if not f_hi < 0.0:
        raise NumericalError(f"scan_down_bracket expects f(hi) < 0, got {f_hi:.3e}")
    ys = np.linspace(hi, lo, n_scan + 1)
    prev_y, prev_f = hi, f_hi
    for y in ys[1:]:
        fy = f(y)
        if fy >= 0.0 or math.isnan(fy):
            if math.isnan(fy):
                raise NumericalError(f"scan_down_bracket hit NaN at y={y}")
            return y, prev_y, fy, prev_f
        prev_y, prev_f = y, fy
    raise NumericalError(
        f"no sign change of the update function in [{lo}, {hi}]: "
        "monotone structure of the iteration is broken"
    )


def pav_nondecreasing(values, weights=None):
    """Pool-adjacent-violators projection onto nondecreasing sequences.

    Returns the weighted least-squares nondecreasing fit (uniform
    weights by default).
    """
    v = np.asarray(values, dtype=float)
    w = np.ones_like(v) if weights is None else np.asarray(weights, dtype=float)
    # blocks as (mean, weight, count) triples, merged while out of order
    means: list[float] = []
    wts: list[float] = []
    cnts: list[int] = []
    for val, wt in zip(v, w):
        means.append(float(val))
        wts.append(float(wt))
        cnts.append(1)
        while len(means) > 1 and means[-2] > means[-1]:
            m2, w2, c2 = means.pop(), wts.pop(), cnts.pop()
            m1, w1, c1 = means.pop(), wts.pop(), cnts.pop()
            wt_tot = w1 + w2
            means.append((m1 * w1 + m2 * w2) / wt_tot)
            wts.append(wt_tot)
            cnts.append(c1 + c2)
    out = np.empty_like(v)
    pos = 0
    for m, c in zip(means, cnts):
        out[pos:pos + c] = m
        pos += c
    return out
