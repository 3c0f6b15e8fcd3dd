"""Numpy implementations of the hot search kernels.

This is the fallback backend, selected when the compiled extension is not
available.  Semantics (including which counterexample is "first") must match
``_speedups`` exactly: the universal quantifier is enumerated in ascending
lexicographic index order and the first failure is returned, with ``-1``
sentinels meaning "no violation".
"""
from __future__ import annotations

import numpy as np

NAME = "pure"


def unimodular_table(P, one_minus):
    """U[a, b] = 1 iff some x in aR has 1 - x in bR."""
    Q = P[:, one_minus]
    U = (P.astype(np.int32) @ Q.T.astype(np.int32)) > 0
    return np.ascontiguousarray(U, dtype=np.uint8)


def range1_first_violation(add, mul, U, pred, ys):
    """First unimodular (a, b) with no y in ys making pred[a + b*y] true."""
    n = add.shape[0]
    pred_b = pred.astype(bool)
    Ub = U.astype(bool)
    for a in range(n):
        if not Ub[a].any():
            continue
        hits = pred_b[add[a][mul[:, ys]]].any(axis=1)  # per b
        viol = Ub[a] & ~hits
        if viol.any():
            return a, int(np.argmax(viol))
    return -1, -1


def sr2_first_violation(add, mul, P, U, one_minus):
    """First (a, b, c) with 1 in aR+bR+cR but no x, y with (a+cx, b+cy) unimodular."""
    n = add.shape[0]
    Ub = U.astype(bool)
    Pb = P.astype(bool)
    for a in range(n):
        arow = Pb[a]
        amembers = np.flatnonzero(arow)
        for b in range(n):
            if Ub[a, b]:
                continue  # x = y = 0 settles every c
            sums = np.unique(add[np.ix_(amembers, np.flatnonzero(Pb[b]))])
            targets = one_minus[sums]  # c qualifies iff cR meets these
            cand = Pb[:, targets].any(axis=1)
            for c in np.flatnonzero(cand):
                shifted_a = add[a][mul[c]]  # a + c*x over x
                shifted_b = add[b][mul[c]]
                if Ub[a, shifted_b].any():  # x = 0 fast path
                    continue
                if not Ub[np.ix_(shifted_a, shifted_b)].any():
                    return a, b, int(c)
    return -1, -1, -1


def hermite_first_violation(mul, P, U):
    """First (a, b) admitting no d, a1, b1 with a = d*a1, b = d*b1, (a1, b1) unimodular.

    Computed by scattering every (d*a1, d*b1) with (a1, b1) unimodular into a
    reachability table, which enumerates the same set as the direct search.
    """
    n = mul.shape[0]
    F = np.zeros((n, n), dtype=bool)
    Ub = U.astype(bool)
    for a1 in range(n):
        b1s = np.flatnonzero(Ub[a1])
        if b1s.size == 0:
            continue
        F[mul[:, a1][:, None], mul[:, b1s]] = True
    bad = ~F
    if not bad.any():
        return -1, -1
    flat = int(np.argmax(bad.ravel()))
    return flat // n, flat % n


def hermite_pair_factor(mul, P, U, a, b):
    """Smallest (d, a1, b1) factorization for one pair, or None."""
    n = mul.shape[0]
    for d in range(n):
        if not (P[d, a] and P[d, b]):
            continue
        a1s = np.flatnonzero(mul[d] == a)
        b1s = np.flatnonzero(mul[d] == b)
        sub = U[np.ix_(a1s, b1s)]
        if sub.any():
            k = int(np.argmax(sub.ravel()))
            return d, int(a1s[k // b1s.size]), int(b1s[k % b1s.size])
    return None
