"""Witness-transforming constructions.

Each function turns a structural witness (a von Neumann regular or
semihereditary shortening, a gcd factorization) into the witness a range
condition asks for, by explicit algebra rather than fresh search.  All
outputs are verified before being returned; a violated hypothesis raises
PreconditionError.
"""
from __future__ import annotations

import numpy as np

from .elements import sh_decompose, vnr_decompose
from .errors import (
    NotSemihereditaryError,
    NotVonNeumannRegularError,
    PreconditionError,
)
from .rings import Element, bezout_pair, is_unimodular, solve_unit_combination as _solve_comb

__all__ = [
    "sr1_witness_from_vnr",
    "regular_witness_from_semihereditary",
    "idem_regular_witness",
    "additively_regular_witness",
]


def _require_unimodular(a: Element, b: Element) -> None:
    if not is_unimodular(a, b):
        raise PreconditionError(f"({a}, {b}) is not unimodular in {a.ring.label}")


def sr1_witness_from_vnr(a: Element, b: Element, y: Element) -> Element:
    """Given a + b*y von Neumann regular on a unimodular pair, produce t
    with a + b*t a unit.

    Writes a + b*y = e*k (idempotent times unit), solves e*u + b*v = 1,
    and returns t = y + (1-e)*k*v, which lands a + b*t on the unit k.
    """
    ring = a.ring
    b, y = ring.element(b), ring.element(y)
    _require_unimodular(a, b)
    w = a + b * y
    try:
        e, k = vnr_decompose(w)
    except NotVonNeumannRegularError as exc:
        raise PreconditionError(f"a + b*y is not von Neumann regular: {exc}") from exc
    sol = _solve_comb(ring, e.i, b.i)
    if sol is None:  # unreachable when (a, b) is unimodular
        raise PreconditionError(f"eR + bR != R for e={e}, b={b}")
    v = Element(ring, sol[1])
    t = y + (ring.one - e) * k * v
    if not (a + b * t).is_unit:
        raise AssertionError(f"construction failed to produce a unit for ({a}, {b}, {y})")
    return t


def regular_witness_from_semihereditary(a: Element, b: Element, y: Element) -> Element:
    """Given a + b*y semihereditary on a unimodular pair, produce s with
    a + b*s regular.

    Writes a + b*y = e*r (idempotent times regular), solves e*u + b*v = 1,
    and returns s = y + r*(1-e)*v, so that a + b*s equals r exactly.
    """
    ring = a.ring
    b, y = ring.element(b), ring.element(y)
    _require_unimodular(a, b)
    w = a + b * y
    try:
        e, r = sh_decompose(w)
    except NotSemihereditaryError as exc:
        raise PreconditionError(f"a + b*y is not semihereditary: {exc}") from exc
    sol = _solve_comb(ring, e.i, b.i)
    if sol is None:
        raise PreconditionError(f"eR + bR != R for e={e}, b={b}")
    v = Element(ring, sol[1])
    s = y + r * (ring.one - e) * v
    out = a + b * s
    if not (out == r and out.is_regular):
        raise AssertionError(f"construction failed to produce a regular element for ({a}, {b}, {y})")
    return s


def idem_regular_witness(a: Element, b: Element) -> tuple[Element, Element]:
    """Produce an idempotent e with s = a + b*e regular.

    Needs a or a + b semihereditary (guaranteed when every element is, or
    when the ring is semihereditary local).  If a = e0*r, the multiplier is
    1 - e0; otherwise a + b = e0*r gives multiplier e0.
    """
    ring = a.ring
    b = ring.element(b)
    _require_unimodular(a, b)
    sh = ring.sh_mask
    if sh[a.i]:
        e0, _ = sh_decompose(a)
        mult = ring.one - e0
    elif sh[(a + b).i]:
        e0, _ = sh_decompose(a + b)
        mult = e0
    else:
        raise PreconditionError(
            f"neither {a} nor {a + b} is semihereditary; "
            "the ring fails both hypotheses at this pair"
        )
    s = a + b * mult
    if not (mult.is_idempotent and s.is_regular):
        raise AssertionError(f"construction failed to produce a regular shortening for ({a}, {b})")
    return mult, s


def additively_regular_witness(a: Element, b: Element) -> Element:
    """For regular b in a Bezout ring of regular range 1, produce u with
    a + u*b regular.

    Factors aR + bR = dR (d inherits regularity from b), finds t with
    a0 + b0*t regular on the unimodular cofactor pair, and returns u = t,
    so a + u*b = (a0 + b0*t)*d is a product of regulars.
    """
    ring = a.ring
    b = ring.element(b)
    if not b.is_regular:
        raise PreconditionError(f"{b} is not regular in {ring.label}")
    w = bezout_pair(a, b)
    if w is None:
        raise PreconditionError(f"aR + bR has no principal generator for ({a}, {b})")
    if not w.d.is_regular:
        raise AssertionError(f"gcd {w.d} of ({a}, regular {b}) must be regular")
    reg = ring.reg_mask
    vals = ring.add[w.a0.i][ring.mul[w.b0.i]]  # a0 + b0*t over t
    hits = np.flatnonzero(reg[vals])
    if hits.size == 0:
        raise PreconditionError(
            f"no regular shortening of the cofactor pair ({w.a0}, {w.b0}); "
            "the ring is not of regular range 1"
        )
    u = Element(ring, int(hits[0]))
    if not (a + u * b).is_regular:
        raise AssertionError(f"construction failed to produce a regular element for ({a}, {b})")
    return u
