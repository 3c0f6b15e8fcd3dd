"""Corpus generation, per-ring property vectors, and the implication audit.

The audit evaluates a fixed catalog of implication rules (R1..R17) over
every generated ring.  A rule whose hypothesis or conclusion could not be
decided (capped or timed out searches) is reported per ring as "skipped",
never silently passed.
"""
from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field

from .errors import CapExceededError
from .properties import PropertyId, Verdict, decide
from .quotient import check_q_theorems
from .rings import Ring, realize
from .specs import Modular, PolyQuotient, Product

__all__ = [
    "CorpusConfig",
    "PropertyVector",
    "ImplicationRule",
    "RULES",
    "generate_corpus",
    "property_vector",
    "assert_implications",
    "mine_open_question",
    "run_corpus",
    "report_to_json",
    "report_to_csv",
    "OPEN_QUESTION",
]

OPEN_QUESTION = "Is every commutative almost clean ring a ring of idempotent regular range 1?"


@dataclass(frozen=True)
class CorpusConfig:
    max_modular_n: int = 100
    product_order_cap: int = 100
    poly_bases: tuple = (2, 3, 4)
    poly_degree_cap: int = 2
    sr2_cap: int = 64
    matrix_oracle_cap: int = 16
    per_ring_timeout_s: float | None = None

    def __post_init__(self):
        for name in ("max_modular_n", "product_order_cap", "poly_degree_cap", "sr2_cap", "matrix_oracle_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    def to_json(self) -> dict:
        return {
            "max_modular_n": self.max_modular_n,
            "product_order_cap": self.product_order_cap,
            "poly_bases": list(self.poly_bases),
            "poly_degree_cap": self.poly_degree_cap,
            "sr2_cap": self.sr2_cap,
            "matrix_oracle_cap": self.matrix_oracle_cap,
            "per_ring_timeout_s": self.per_ring_timeout_s,
        }


def generate_corpus(cfg: CorpusConfig | None = None) -> list[Ring]:
    """Deterministic ring list: modulars, binary products, poly quotients."""
    cfg = cfg or CorpusConfig()
    specs = []
    for n in range(2, cfg.max_modular_n + 1):
        specs.append(Modular(n))
    for m in range(2, cfg.product_order_cap // 2 + 1):
        for n in range(m, cfg.product_order_cap // m + 1):
            specs.append(Product(Modular(m), Modular(n)))
    order_cap = max(cfg.max_modular_n, cfg.product_order_cap)
    for base in cfg.poly_bases:
        for deg in range(1, cfg.poly_degree_cap + 1):
            for tail in itertools.product(range(base), repeat=deg):
                spec = PolyQuotient(Modular(base), tuple(tail) + (1,))
                if spec.order <= order_cap:
                    specs.append(spec)
    seen = set()
    rings = []
    for spec in specs:
        key = spec.spec_string()
        if key in seen:
            continue
        seen.add(key)
        rings.append(realize(spec))
    return rings


@dataclass
class PropertyVector:
    spec: str
    order: int
    units: int
    idempotents: int
    regulars: int
    verdicts: dict
    q_report: dict | None = None

    def holds(self, prop: PropertyId):
        return self.verdicts[prop].holds

    def to_json(self) -> dict:
        return {
            "spec": self.spec,
            "order": self.order,
            "units": self.units,
            "idempotents": self.idempotents,
            "regulars": self.regulars,
            "properties": {p.value: v.to_json() for p, v in self.verdicts.items()},
            "q_checks": self.q_report,
        }


def property_vector(ring: Ring, cfg: CorpusConfig | None = None) -> PropertyVector:
    """Decide the whole property catalog for one ring.

    Capped searches land as "undecided-by-search"; if the per-ring budget
    runs out, the remaining properties are recorded as "timeout".
    """
    cfg = cfg or CorpusConfig()
    start = time.monotonic()
    budget = cfg.per_ring_timeout_s
    verdicts = {}
    for prop in PropertyId:
        if budget is not None and time.monotonic() - start > budget:
            verdicts[prop] = Verdict(prop, None, None, status="timeout")
            continue
        try:
            verdicts[prop] = decide(prop, ring, sr2_cap=cfg.sr2_cap)
        except CapExceededError:
            verdicts[prop] = Verdict(prop, None, None, status="undecided-by-search")
    if budget is not None and time.monotonic() - start > budget:
        q_report = {"spec": ring.label, "order": ring.order, "checks": [], "status": "timeout"}
    else:
        q_report = check_q_theorems(ring, verdicts)
    return PropertyVector(
        spec=ring.label,
        order=ring.order,
        units=int(ring.unit_mask.sum()),
        idempotents=int(ring.idem_mask.sum()),
        regulars=int(ring.reg_mask.sum()),
        verdicts=verdicts,
        q_report=q_report,
    )


# -- implication rules --------------------------------------------------------


def _imp(h, c):
    """Tri-state implication: None means the side could not be decided."""
    if h is None:
        return "skipped"
    if not h:
        return "pass"
    if c is None:
        return "skipped"
    return "pass" if c else "violated"


def _eqv(x, y):
    if x is None or y is None:
        return "skipped"
    return "pass" if x == y else "violated"


def _conj(*vals):
    if any(v is False for v in vals):
        return False
    if any(v is None for v in vals):
        return None
    return True


def _q_detail(pv: PropertyVector, check_id: str, key: str):
    if not pv.q_report:
        return None
    for check in pv.q_report.get("checks", []):
        if check["id"] == check_id:
            return check["detail"].get(key)
    return None


@dataclass(frozen=True)
class ImplicationRule:
    id: str
    statement: str
    involved: tuple
    evaluate: object = field(repr=False)  # PropertyVector -> status string


def _rule(id, statement, involved, fn):
    return ImplicationRule(id, statement, tuple(involved), fn)


P = PropertyId

RULES = [
    _rule("R1", "stable range 1 and von Neumann regular range 1 coincide",
          (P.SR1, P.VNR_RANGE1),
          lambda pv: _eqv(pv.holds(P.SR1), pv.holds(P.VNR_RANGE1))),
    _rule("R2", "regular range 1 and semihereditary range 1 coincide",
          (P.REG_RANGE1, P.SH_RANGE1),
          lambda pv: _eqv(pv.holds(P.REG_RANGE1), pv.holds(P.SH_RANGE1))),
    _rule("R3", "a semihereditary local ring has semihereditary range 1",
          (P.SH_LOCAL, P.SH_RANGE1),
          lambda pv: _imp(pv.holds(P.SH_LOCAL), pv.holds(P.SH_RANGE1))),
    _rule("R4", "a regular local ring has idempotent regular range 1",
          (P.REG_LOCAL, P.IDEM_REG_RANGE1),
          lambda pv: _imp(pv.holds(P.REG_LOCAL), pv.holds(P.IDEM_REG_RANGE1))),
    _rule("R5", "elementwise semihereditary rings have idempotent regular range 1",
          (P.PP_ELEMENTWISE, P.IDEM_REG_RANGE1),
          lambda pv: _imp(pv.holds(P.PP_ELEMENTWISE), pv.holds(P.IDEM_REG_RANGE1))),
    _rule("R6", "idempotent regular range 1 implies almost clean",
          (P.IDEM_REG_RANGE1, P.ALMOST_CLEAN),
          lambda pv: _imp(pv.holds(P.IDEM_REG_RANGE1), pv.holds(P.ALMOST_CLEAN))),
    _rule("R7", "indecomposable almost clean rings are exactly the regular local rings",
          (P.INDECOMPOSABLE, P.ALMOST_CLEAN, P.REG_LOCAL),
          lambda pv: _eqv(_conj(pv.holds(P.INDECOMPOSABLE), pv.holds(P.ALMOST_CLEAN)),
                          pv.holds(P.REG_LOCAL))),
    _rule("R8", "an indecomposable almost clean Bezout ring is Hermite",
          (P.INDECOMPOSABLE, P.ALMOST_CLEAN, P.BEZOUT, P.HERMITE),
          lambda pv: _imp(_conj(pv.holds(P.INDECOMPOSABLE), pv.holds(P.ALMOST_CLEAN),
                                pv.holds(P.BEZOUT)),
                          pv.holds(P.HERMITE))),
    _rule("R9", "a semihereditary local ring has idempotent regular range 1",
          (P.SH_LOCAL, P.IDEM_REG_RANGE1),
          lambda pv: _imp(pv.holds(P.SH_LOCAL), pv.holds(P.IDEM_REG_RANGE1))),
    _rule("R10", "a regular local Bezout ring has stable range 2",
          (P.REG_LOCAL, P.BEZOUT, P.SR2),
          lambda pv: _imp(_conj(pv.holds(P.REG_LOCAL), pv.holds(P.BEZOUT)), pv.holds(P.SR2))),
    _rule("R11", "for Bezout rings, Hermite is the same as stable range 2",
          (P.BEZOUT, P.HERMITE, P.SR2),
          lambda pv: "skipped" if pv.holds(P.BEZOUT) is None
          else ("pass" if not pv.holds(P.BEZOUT)
                else _eqv(pv.holds(P.HERMITE), pv.holds(P.SR2)))),
    _rule("R12", "a Bezout ring of regular range 1 has a quotient of stable range 1",
          (P.BEZOUT, P.REG_RANGE1),
          lambda pv: _imp(_conj(pv.holds(P.BEZOUT), pv.holds(P.REG_RANGE1)),
                          _q_detail(pv, "quotient-stable-range-1", "stable_range_1_on_quotient"))),
    _rule("R13", "for Bezout rings, the quotient is vnr local iff the base is semihereditary local",
          (P.BEZOUT, P.SH_LOCAL),
          lambda pv: "skipped" if pv.holds(P.BEZOUT) is None
          else ("pass" if not pv.holds(P.BEZOUT)
                else _eqv(_q_detail(pv, "quotient-vnr-local-iff-base-sh-local", "vnr_local_on_quotient"),
                          pv.holds(P.SH_LOCAL)))),
    _rule("R14", "a Bezout ring of regular range 1 is additively regular",
          (P.BEZOUT, P.REG_RANGE1, P.ADD_REGULAR),
          lambda pv: _imp(_conj(pv.holds(P.BEZOUT), pv.holds(P.REG_RANGE1)),
                          pv.holds(P.ADD_REGULAR))),
    _rule("R15", "a von Neumann regular local ring is semihereditary local",
          (P.VNR_LOCAL, P.SH_LOCAL),
          lambda pv: _imp(pv.holds(P.VNR_LOCAL), pv.holds(P.SH_LOCAL))),
    _rule("R16", "a clean ring has idempotent regular range 1",
          (P.CLEAN, P.IDEM_REG_RANGE1),
          lambda pv: _imp(pv.holds(P.CLEAN), pv.holds(P.IDEM_REG_RANGE1))),
    _rule("R17", "stable range 1 and idempotent regular range 1 each imply regular range 1",
          (P.SR1, P.IDEM_REG_RANGE1, P.REG_RANGE1),
          lambda pv: _worst(_imp(pv.holds(P.SR1), pv.holds(P.REG_RANGE1)),
                            _imp(pv.holds(P.IDEM_REG_RANGE1), pv.holds(P.REG_RANGE1)))),
]


def _worst(*statuses):
    for s in ("violated", "skipped", "pass"):
        if s in statuses:
            return s
    return "pass"


_EQUIVALENCE_RULES = {"R1", "R2", "R7", "R11", "R13"}


def assert_implications(vectors: list[PropertyVector]) -> dict:
    """Evaluate every rule on every ring; violations carry full witnesses."""
    implications = []
    counts = {r.id: {"pass": 0, "violated": 0, "skipped": 0} for r in RULES}
    violations = []
    for pv in sorted(vectors, key=lambda v: v.spec):
        for rule in RULES:
            status = rule.evaluate(pv)
            counts[rule.id][status] += 1
            entry = {"rule": rule.id, "ring": pv.spec, "status": status}
            if status == "violated":
                entry["witness"] = {
                    p.value: pv.verdicts[p].to_json() for p in rule.involved
                }
                if rule.id in ("R12", "R13"):
                    entry["witness"]["q_checks"] = pv.q_report
                violations.append(entry)
            implications.append(entry)
    notes = {}
    for rule in RULES:
        if rule.id not in _EQUIVALENCE_RULES:
            continue
        observed = set()
        for pv in vectors:
            vals = tuple(pv.holds(p) for p in rule.involved)
            if None not in vals:
                observed.add(vals)
        if len(observed) <= 1 and counts[rule.id]["violated"] == 0:
            notes[rule.id] = "consistent, not separated (one truth pattern on this corpus)"
    return {
        "implications": implications,
        "violations": violations,
        "summary": {
            "rings": len(vectors),
            "rules": {r.id: counts[r.id] for r in RULES},
            "violation_count": len(violations),
            "rule_notes": notes,
        },
    }


def mine_open_question(vectors: list[PropertyVector]) -> dict:
    """List rings that are almost clean but fail idempotent regular range 1.

    Expected empty here: every finite commutative ring is clean (it is a
    finite product of local rings), cleanness forces idempotent regular
    range 1, and almost-cleanness holds as well, so a finite corpus cannot
    separate the two sides.  An empty list is a consistency check, not a
    resolution of the question.
    """
    hits = []
    for pv in sorted(vectors, key=lambda v: v.spec):
        ac = pv.holds(PropertyId.ALMOST_CLEAN)
        irr = pv.holds(PropertyId.IDEM_REG_RANGE1)
        if ac is True and irr is False:
            hits.append(
                {
                    "ring": pv.spec,
                    "almost_clean": pv.verdicts[PropertyId.ALMOST_CLEAN].to_json(),
                    "idem_reg_range1": pv.verdicts[PropertyId.IDEM_REG_RANGE1].to_json(),
                }
            )
    return {
        "question": OPEN_QUESTION,
        "counterexamples": hits,
        "expected_empty_rationale": (
            "every finite commutative ring is clean (a finite product of local "
            "rings), cleanness implies idempotent regular range 1, and almost-"
            "cleanness also holds, so no finite ring can witness a separation; "
            "an empty list confirms consistency and does not resolve the question"
        ),
    }


def run_corpus(cfg: CorpusConfig | None = None, progress=None) -> dict:
    """Full pipeline: generate, decide, audit; returns the report dict."""
    cfg = cfg or CorpusConfig()
    rings = generate_corpus(cfg)
    vectors = []
    for i, ring in enumerate(rings):
        if progress:
            progress(i, len(rings), ring.label)
        vectors.append(property_vector(ring, cfg))
    audit = assert_implications(vectors)
    report = {
        "config": cfg.to_json(),
        "rings": [pv.to_json() for pv in sorted(vectors, key=lambda v: v.spec)],
        "implications": audit["implications"],
        "summary": audit["summary"],
        "open_question": mine_open_question(vectors),
    }
    return report


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


CSV_COLUMNS = ["spec", "order", "units", "idempotents", "regulars"] + [p.value for p in PropertyId]


def report_to_csv(report: dict) -> str:
    """Flat property matrix, one row per ring."""
    lines = [",".join(CSV_COLUMNS)]
    for ring in report["rings"]:
        row = [
            '"%s"' % ring["spec"],
            str(ring["order"]),
            str(ring["units"]),
            str(ring["idempotents"]),
            str(ring["regulars"]),
        ]
        for p in PropertyId:
            cell = ring["properties"][p.value]
            if cell["holds"] is None:
                row.append(cell["status"])
            else:
                row.append("true" if cell["holds"] else "false")
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"
