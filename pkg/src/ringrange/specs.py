"""Ring construction recipes and the text grammar for naming them.

Grammar accepted by :func:`parse_ring_spec` (and emitted by ``spec_string``):

    spec := atom ("x" atom)*
    atom := "Z" nat | "Z" nat "[x]/(" poly ")"
    poly := monic polynomial in x over Z_nat, e.g. "x^2", "x^2+x+1"

Examples: ``Z36``, ``Z4 x Z9``, ``Z4[x]/(x^2)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import RingSpecError

__all__ = ["Modular", "Product", "PolyQuotient", "RingSpec", "parse_ring_spec", "parse_poly"]


@dataclass(frozen=True)
class Modular:
    """Residue ring of the integers modulo ``n`` (n >= 2, so 1 != 0)."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise RingSpecError(f"modulus must be an integer >= 2, got {self.n!r}")

    @property
    def order(self) -> int:
        return self.n

    def spec_string(self) -> str:
        return f"Z{self.n}"


@dataclass(frozen=True)
class Product:
    """Direct product of two or more component rings, componentwise arithmetic."""

    factors: tuple

    def __init__(self, *factors):
        # accept Product(a, b, ...) or Product([a, b, ...])
        if len(factors) == 1 and isinstance(factors[0], (list, tuple)):
            factors = tuple(factors[0])
        if len(factors) < 2:
            raise RingSpecError("product needs at least two factors")
        for f in factors:
            if not isinstance(f, (Modular, Product, PolyQuotient)):
                raise RingSpecError(f"invalid product factor {f!r}")
        object.__setattr__(self, "factors", tuple(factors))

    @property
    def order(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.order
        return out

    def spec_string(self) -> str:
        return " x ".join(f.spec_string() for f in self.factors)


@dataclass(frozen=True)
class PolyQuotient:
    """Quotient Z_n[x]/(f) for a monic modulus f of degree >= 1.

    ``modulus`` holds the coefficients of f in ascending degree, reduced
    mod n, including the leading 1.  Monicity makes the carrier a free
    Z_n module of rank deg(f), so the ring has exactly n**deg elements.
    """

    base: Modular
    modulus: tuple

    def __init__(self, base, modulus):
        if isinstance(base, int):
            base = Modular(base)
        if not isinstance(base, Modular):
            raise RingSpecError("polynomial quotient base must be a modular ring")
        coeffs = tuple(int(c) % base.n for c in modulus)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if len(coeffs) < 2:
            raise RingSpecError("modulus must have degree >= 1")
        if coeffs[-1] != 1:
            raise RingSpecError(f"modulus must be monic over Z{base.n}, got leading {coeffs[-1]}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "modulus", coeffs)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def order(self) -> int:
        return self.base.n ** self.degree

    def spec_string(self) -> str:
        return f"Z{self.base.n}[x]/({format_poly(self.modulus)})"


RingSpec = (Modular, Product, PolyQuotient)


def format_poly(coeffs) -> str:
    """Render an ascending coefficient tuple as descending-power text."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        elif k == 1:
            terms.append("x" if c == 1 else f"{c}x")
        else:
            terms.append(f"x^{k}" if c == 1 else f"{c}x^{k}")
    return "+".join(terms) if terms else "0"


_TERM_RE = re.compile(r"^(\d+)?\*?(x(?:\^(\d+))?)?$")


def parse_poly(text: str, n: int) -> tuple:
    """Parse polynomial text like ``x^2+3x+1`` into ascending coefficients mod n."""
    cleaned = text.replace(" ", "")
    if not cleaned:
        raise RingSpecError("empty polynomial")
    # normalize leading sign and split into signed terms
    if cleaned[0] not in "+-":
        cleaned = "+" + cleaned
    parts = re.findall(r"[+-][^+-]+", cleaned)
    if "".join(parts) != cleaned:
        raise RingSpecError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, int] = {}
    for part in parts:
        sign = -1 if part[0] == "-" else 1
        m = _TERM_RE.match(part[1:])
        if not m or (m.group(1) is None and m.group(2) is None):
            raise RingSpecError(f"cannot parse polynomial term {part!r}")
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(2) is None:
            deg = 0
        else:
            deg = int(m.group(3)) if m.group(3) is not None else 1
        coeffs[deg] = (coeffs.get(deg, 0) + sign * coeff) % n
    top = max(coeffs)
    return tuple(coeffs.get(k, 0) for k in range(top + 1))


_ATOM_RE = re.compile(r"Z\s*(\d+)\s*(\[x\]\s*/\s*\(([^()]*)\))?", re.IGNORECASE)


def parse_ring_spec(text: str):
    """Parse a ring spec string into a construction recipe."""
    if not isinstance(text, str) or not text.strip():
        raise RingSpecError("empty ring spec")
    pos = 0
    atoms = []
    s = text.strip()
    while True:
        m = _ATOM_RE.match(s, pos)
        if not m:
            raise RingSpecError(f"expected ring atom at {s[pos:]!r} in {text!r}")
        n = int(m.group(1))
        if m.group(2):
            atoms.append(PolyQuotient(Modular(n), parse_poly(m.group(3), n)))
        else:
            atoms.append(Modular(n))
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos == len(s):
            break
        if s[pos] in "xX*×":
            pos += 1
            while pos < len(s) and s[pos].isspace():
                pos += 1
        else:
            raise RingSpecError(f"unexpected {s[pos:]!r} in {text!r}")
    if len(atoms) == 1:
        return atoms[0]
    return Product(*atoms)
