# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot search kernels.

Same contracts as the ``pure`` module: int32 C-contiguous tables, uint8
masks, counterexamples reported in ascending lexicographic order with -1
sentinels for "none".
"""
from libc.stdint cimport int32_t, uint8_t
from libc.stdlib cimport free, malloc

import numpy as np

NAME = "compiled"


def unimodular_table(P, one_minus):
    cdef const uint8_t[:, ::1] p = P
    cdef const int32_t[::1] om = one_minus
    cdef int n = p.shape[0]
    out = np.zeros((n, n), dtype=np.uint8)
    cdef uint8_t[:, ::1] u = out
    cdef int a, b, x
    for a in range(n):
        for b in range(n):
            for x in range(n):
                if p[a, x] and p[b, om[x]]:
                    u[a, b] = 1
                    break
    return out


def range1_first_violation(add, mul, U, pred, ys):
    cdef const int32_t[:, ::1] ad = add
    cdef const int32_t[:, ::1] mu = mul
    cdef const uint8_t[:, ::1] un = U
    cdef const uint8_t[::1] pr = pred
    cdef const int32_t[::1] yy = ys
    cdef int n = ad.shape[0]
    cdef int k = yy.shape[0]
    cdef int a, b, j
    cdef bint ok
    for a in range(n):
        for b in range(n):
            if not un[a, b]:
                continue
            ok = False
            for j in range(k):
                if pr[ad[a, mu[b, yy[j]]]]:
                    ok = True
                    break
            if not ok:
                return a, b
    return -1, -1


def sr2_first_violation(add, mul, P, U, one_minus):
    cdef const int32_t[:, ::1] ad = add
    cdef const int32_t[:, ::1] mu = mul
    cdef const uint8_t[:, ::1] p = P
    cdef const uint8_t[:, ::1] un = U
    cdef const int32_t[::1] om = one_minus
    cdef int n = ad.shape[0]
    cdef int a, b, c, x, y, i, j, s, na, nb
    cdef bint triple, found
    cdef int32_t *amem = <int32_t *> malloc(n * sizeof(int32_t))
    cdef int32_t *bmem = <int32_t *> malloc(n * sizeof(int32_t))
    cdef uint8_t *need = <uint8_t *> malloc(n * sizeof(uint8_t))
    if amem == NULL or bmem == NULL or need == NULL:
        free(amem); free(bmem); free(need)
        raise MemoryError()
    try:
        for a in range(n):
            na = 0
            for i in range(n):
                if p[a, i]:
                    amem[na] = i
                    na += 1
            for b in range(n):
                if un[a, b]:
                    continue
                nb = 0
                for i in range(n):
                    if p[b, i]:
                        bmem[nb] = i
                        nb += 1
                # need[t] = 1 iff t == 1 - s for some s in aR + bR
                for i in range(n):
                    need[i] = 0
                for i in range(na):
                    for j in range(nb):
                        s = ad[amem[i], bmem[j]]
                        need[om[s]] = 1
                for c in range(n):
                    triple = False
                    for i in range(n):
                        if p[c, i] and need[i]:
                            triple = True
                            break
                    if not triple:
                        continue
                    found = False
                    for x in range(n):
                        i = ad[a, mu[c, x]]
                        for y in range(n):
                            if un[i, ad[b, mu[c, y]]]:
                                found = True
                                break
                        if found:
                            break
                    if not found:
                        return a, b, c
    finally:
        free(amem)
        free(bmem)
        free(need)
    return -1, -1, -1


def hermite_first_violation(mul, P, U):
    cdef const int32_t[:, ::1] mu = mul
    cdef const uint8_t[:, ::1] p = P
    cdef const uint8_t[:, ::1] un = U
    cdef int n = mu.shape[0]
    cdef int a, b, d, i, j
    cdef bint found
    cdef int32_t *a1s = <int32_t *> malloc(n * sizeof(int32_t))
    cdef int32_t *b1s = <int32_t *> malloc(n * sizeof(int32_t))
    cdef int na, nb
    if a1s == NULL or b1s == NULL:
        free(a1s); free(b1s)
        raise MemoryError()
    try:
        for a in range(n):
            for b in range(n):
                found = False
                for d in range(n):
                    if not (p[d, a] and p[d, b]):
                        continue
                    na = 0
                    nb = 0
                    for i in range(n):
                        if mu[d, i] == a:
                            a1s[na] = i
                            na += 1
                        if mu[d, i] == b:
                            b1s[nb] = i
                            nb += 1
                    for i in range(na):
                        for j in range(nb):
                            if un[a1s[i], b1s[j]]:
                                found = True
                                break
                        if found:
                            break
                    if found:
                        break
                if not found:
                    return a, b
    finally:
        free(a1s)
        free(b1s)
    return -1, -1
