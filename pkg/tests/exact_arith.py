"""Exact rational products of sparse float64 matrices.

Each stored entry is converted to a Fraction without rounding, so the
residual reported is the error of the stored entries alone, free of the
rounding that a float64 matmul adds on top.
"""

from fractions import Fraction

import numpy as np


def to_sparse(M, tol=0.0):
    M = np.asarray(M, dtype=complex)
    out = {}
    for i, j in zip(*np.nonzero(np.abs(M) > tol)):
        z = M[i, j]
        out[(int(i), int(j))] = (Fraction(float(z.real)), Fraction(float(z.imag)))
    return out


def matmul(A, B):
    rows = {}
    for (i, j), v in B.items():
        rows.setdefault(i, []).append((j, v))
    out = {}
    for (i, m), (ar, ai) in A.items():
        for j, (br, bi) in rows.get(m, ()):
            cr, ci = out.get((i, j), (Fraction(0), Fraction(0)))
            out[(i, j)] = (cr + ar * br - ai * bi, ci + ar * bi + ai * br)
    return out


def add(A, B, scale=1):
    out = dict(A)
    for key, (br, bi) in B.items():
        ar, ai = out.get(key, (Fraction(0), Fraction(0)))
        out[key] = (ar + scale * br, ai + scale * bi)
    return out


def commutator(A, B):
    return add(matmul(A, B), matmul(B, A), -1)


def max_residual(S, target, m):
    """max |S - target| over the leading m x m block; target is a dense numpy matrix."""
    T = to_sparse(np.asarray(target)[:m, :m])
    keys = {k for k in S if k[0] < m and k[1] < m} | set(T)
    worst = 0.0
    for key in keys:
        sr, si = S.get(key, (Fraction(0), Fraction(0)))
        tr, ti = T.get(key, (Fraction(0), Fraction(0)))
        worst = max(worst, abs(complex(float(sr - tr), float(si - ti))))
    return worst
