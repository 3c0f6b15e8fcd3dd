"""Elementwise classification and constructive decompositions.

The two central algorithms split an element into structured factors and
are verified on every call, since both are cheap:

* a von Neumann regular element ``a`` (some x has a*x*a = a) factors as
  idempotent times unit via e = a*x, u = (1 - e) + a;
* an element whose annihilator is generated by an idempotent phi factors
  as e * r with e = 1 - phi idempotent and r = a - phi regular.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotSemihereditaryError, NotVonNeumannRegularError
from .rings import Element, Ring, annihilator

__all__ = [
    "ElementClass",
    "classify",
    "vnr_decompose",
    "sh_decompose",
    "clean_decompose",
    "almost_clean_decompose",
]


@dataclass(frozen=True)
class ElementClass:
    """Decided flags for one element, with witnesses where they exist.

    ``vnr_witness`` is the smallest x with a*x*a = a; ``sh_idempotent`` is
    the idempotent generating the annihilator (unique when it exists).
    ``is_nilpotent`` is diagnostic metadata only.
    """

    element: Element
    is_unit: bool
    is_regular: bool
    is_idempotent: bool
    is_vnr: bool
    is_semihereditary: bool
    is_nilpotent: bool
    vnr_witness: Element | None = None
    sh_idempotent: Element | None = None


def _vnr_witness_index(ring: Ring, i: int) -> int:
    vals = ring.mul[ring.mul[i], i]  # a*x*a over x
    hits = np.flatnonzero(vals == i)
    return int(hits[0]) if hits.size else -1


def _sh_idempotent_index(ring: Ring, i: int) -> int:
    ann = (ring.mul[i] == ring.zero_i).astype(np.uint8)
    P = ring.principal_table
    for e in np.flatnonzero(ring.idem_mask):
        if (P[e] == ann).all():
            return int(e)
    return -1


def classify(a: Element) -> ElementClass:
    """Decide all element flags; results are cached on the ring."""
    ring = a.ring
    cache = ring.classify_cache()
    got = cache.get(a.i)
    if got is not None:
        return got
    x = _vnr_witness_index(ring, a.i)
    phi = _sh_idempotent_index(ring, a.i)
    out = ElementClass(
        element=a,
        is_unit=bool(ring.unit_mask[a.i]),
        is_regular=bool(ring.reg_mask[a.i]),
        is_idempotent=bool(ring.idem_mask[a.i]),
        is_vnr=x >= 0,
        is_semihereditary=phi >= 0,
        is_nilpotent=bool(ring.nilpotent_mask[a.i]),
        vnr_witness=Element(ring, x) if x >= 0 else None,
        sh_idempotent=Element(ring, phi) if phi >= 0 else None,
    )
    cache[a.i] = out
    return out


def vnr_decompose(a: Element) -> tuple[Element, Element]:
    """Split a von Neumann regular element as (idempotent e, unit u) with e*u = a."""
    ring = a.ring
    cache = ring._cache.setdefault("vnr_decompose", {})
    got = cache.get(a.i)
    if got is not None:
        return got
    x = _vnr_witness_index(ring, a.i)
    if x < 0:
        raise NotVonNeumannRegularError(f"{a!r} has no x with a*x*a = a")
    e = Element(ring, ring.mul_i(a.i, x))
    u = (ring.one - e) + a
    if not (e.is_idempotent and u.is_unit and e * u == a):
        raise AssertionError(f"vnr decomposition broke its contract for {a!r}")
    cache[a.i] = (e, u)
    return e, u


def sh_decompose(a: Element) -> tuple[Element, Element]:
    """Split an element with idempotent-generated annihilator as (e, r), e*r = a.

    e is idempotent, r is regular, and ann(a) = (1-e)R.  Raises with the
    annihilator as evidence when no idempotent generates it.
    """
    ring = a.ring
    cache = ring._cache.setdefault("sh_decompose", {})
    got = cache.get(a.i)
    if got is not None:
        return got
    phi_i = _sh_idempotent_index(ring, a.i)
    if phi_i < 0:
        raise NotSemihereditaryError(
            f"annihilator of {a!r} is not generated by an idempotent",
            annihilator=annihilator(a),
        )
    phi = Element(ring, phi_i)
    e = ring.one - phi
    r = a - phi
    ann_ok = (ring.mul[a.i] == ring.zero_i) == ring.principal_table[phi_i].astype(bool)
    if not (e.is_idempotent and r.is_regular and e * r == a and ann_ok.all()):
        raise AssertionError(f"semihereditary decomposition broke its contract for {a!r}")
    cache[a.i] = (e, r)
    return e, r


def clean_decompose(a: Element) -> tuple[Element, Element] | None:
    """First (idempotent e, unit u) with e + u = a, idempotents ascending."""
    ring = a.ring
    for e_i in np.flatnonzero(ring.idem_mask):
        u_i = ring.sub_i(a.i, int(e_i))
        if ring.unit_mask[u_i]:
            return Element(ring, int(e_i)), Element(ring, u_i)
    return None


def almost_clean_decompose(a: Element) -> tuple[Element, Element] | None:
    """First (idempotent e, regular r) with e + r = a, idempotents ascending."""
    ring = a.ring
    for e_i in np.flatnonzero(ring.idem_mask):
        r_i = ring.sub_i(a.i, int(e_i))
        if ring.reg_mask[r_i]:
            return Element(ring, int(e_i)), Element(ring, r_i)
    return None
