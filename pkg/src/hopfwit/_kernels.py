"""Row reduction over GF(p) on int64 arrays.

Two interchangeable implementations: a numba ``@njit`` loop kernel and a
vectorised pure-numpy one.  ``HOPFWIT_NUMBA=0`` in the environment forces
the numpy path; it is also used when numba is not importable.  Entries must
lie in ``[0, p)`` with ``p < 2**31`` so products fit in int64.
"""

import os

import numpy as np

try:
    from numba import njit
    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and os.environ.get("HOPFWIT_NUMBA", "1") != "0"

MAX_PRIME = 2**31


def rref_mod_p_numpy(a, p):
    """Return ``(rref, pivots)``; ``a`` is copied, never modified."""
    a = np.array(a, dtype=np.int64, copy=True) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r])) % p
        pivots.append(c)
        r += 1
    return a, np.array(pivots, dtype=np.int64)


if HAS_NUMBA:
    @njit(cache=True)
    def _inv_mod(x, p):
        t, new_t = 0, 1
        r, new_r = p, x
        while new_r != 0:
            q = r // new_r
            t, new_t = new_t, t - q * new_t
            r, new_r = new_r, r - q * new_r
        if t < 0:
            t += p
        return t

    @njit(cache=True)
    def rref_mod_p_numba(a, p):
        a = a.copy() % p
        rows, cols = a.shape
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        npiv = 0
        r = 0
        for c in range(cols):
            if r == rows:
                break
            k = -1
            for i in range(r, rows):
                if a[i, c] != 0:
                    k = i
                    break
            if k < 0:
                continue
            if k != r:
                for j in range(cols):
                    tmp = a[r, j]
                    a[r, j] = a[k, j]
                    a[k, j] = tmp
            inv = _inv_mod(a[r, c], p)
            for j in range(c, cols):
                a[r, j] = a[r, j] * inv % p
            for i in range(rows):
                if i != r and a[i, c] != 0:
                    f = a[i, c]
                    for j in range(c, cols):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
            pivots[npiv] = c
            npiv += 1
            r += 1
        return a, pivots[:npiv]
else:  # pragma: no cover
    rref_mod_p_numba = None


def rref_mod_p(a, p):
    """Dispatch to the selected backend."""
    if USE_NUMBA:
        return rref_mod_p_numba(np.ascontiguousarray(a, dtype=np.int64), np.int64(p))
    return rref_mod_p_numpy(a, p)


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
