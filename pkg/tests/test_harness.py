import pytest

import ringrange as rr
from ringrange import CorpusConfig, PropertyId as P, Verdict
from ringrange.harness import (
    RULES,
    assert_implications,
    generate_corpus,
    mine_open_question,
    property_vector,
    report_to_csv,
    report_to_json,
    run_corpus,
)

SMALL_CFG = CorpusConfig(max_modular_n=20, product_order_cap=16, poly_bases=(2, 3, 4), poly_degree_cap=2)


@pytest.fixture(scope="module")
def small_vectors():
    cfg = SMALL_CFG
    return cfg, [property_vector(r, cfg) for r in generate_corpus(cfg)]


class TestGenerateCorpus:
    def test_default_corpus_size_and_members(self):
        rings = generate_corpus()
        labels = {r.label for r in rings}
        assert len(rings) >= 150
        assert "Z36" in labels
        assert "Z4[x]/(x^2)" in labels
        assert "Z2" in labels
        assert len(labels) == len(rings)  # deduplicated

    def test_minimal_config(self):
        rings = generate_corpus(CorpusConfig(max_modular_n=2, product_order_cap=4, poly_bases=(2,), poly_degree_cap=1))
        labels = [r.label for r in rings]
        assert "Z2" in labels

    def test_deterministic_order(self):
        a = [r.label for r in generate_corpus(SMALL_CFG)]
        b = [r.label for r in generate_corpus(SMALL_CFG)]
        assert a == b

    def test_product_order_respected(self):
        for ring in generate_corpus(SMALL_CFG):
            assert ring.order <= max(SMALL_CFG.max_modular_n, SMALL_CFG.product_order_cap)

    def test_bad_config_rejected(self):
        with pytest.raises(ValueError):
            CorpusConfig(max_modular_n=0)


class TestPropertyVector:
    def test_z36_vector(self, z36):
        pv = property_vector(z36)
        assert pv.order == 36 and pv.units == 12 and pv.idempotents == 4 and pv.regulars == 12
        assert pv.holds(P.SH_LOCAL) is False
        assert pv.holds(P.SH_RANGE1) is True
        assert pv.holds(P.BEZOUT) is True
        assert pv.holds(P.HERMITE) is True
        assert all(v.status == "decided" for v in pv.verdicts.values())

    def test_vector_covers_whole_catalog(self, small_vectors):
        _, vectors = small_vectors
        for pv in vectors:
            assert set(pv.verdicts) == set(P), pv.spec

    def test_sr2_capped_as_undecided(self):
        ring = rr.realize("Z72")
        pv = property_vector(ring, CorpusConfig(sr2_cap=64))
        v = pv.verdicts[P.SR2]
        assert v.holds is None and v.status == "undecided-by-search"

    def test_timeout_recorded_not_dropped(self, z12):
        pv = property_vector(z12, CorpusConfig(per_ring_timeout_s=0.0))
        statuses = {v.status for v in pv.verdicts.values()}
        assert statuses == {"timeout"}
        assert pv.q_report.get("status") == "timeout"

    def test_truth_value_coverage_guard(self, small_vectors):
        # the corpus must exercise both truth values of the separating
        # properties, or implication passes would be vacuous
        cfg, vectors = small_vectors
        by_label = {pv.spec: pv for pv in vectors}
        for needed in ("Z6", "Z7", "Z16", "Z4[x]/(x^2)"):
            assert needed in by_label
        for prop in (P.BEZOUT, P.HERMITE, P.SH_LOCAL, P.REG_LOCAL, P.INDECOMPOSABLE):
            values = {pv.holds(prop) for pv in vectors}
            assert values >= {True, False}, prop


class TestImplications:
    def test_small_corpus_zero_violations(self, small_vectors):
        _, vectors = small_vectors
        audit = assert_implications(vectors)
        assert audit["summary"]["violation_count"] == 0
        assert audit["summary"]["rings"] == len(vectors)

    def test_all_rules_evaluated_per_ring(self, small_vectors):
        _, vectors = small_vectors
        audit = assert_implications(vectors)
        assert len(audit["implications"]) == len(vectors) * len(RULES)
        rules_seen = {e["rule"] for e in audit["implications"]}
        assert rules_seen == {r.id for r in RULES}

    def test_equivalence_rules_note_non_separation(self, small_vectors):
        _, vectors = small_vectors
        audit = assert_implications(vectors)
        notes = audit["summary"]["rule_notes"]
        assert "R1" in notes and "R2" in notes

    def test_fabricated_violation_is_reported_with_witnesses(self, z6):
        pv = property_vector(z6)
        fake = dict(pv.verdicts)
        fake[P.IDEM_REG_RANGE1] = Verdict(P.IDEM_REG_RANGE1, False, {"counterexample": {"a": "0", "b": "1"}})
        broken = rr.PropertyVector(
            spec=pv.spec, order=pv.order, units=pv.units, idempotents=pv.idempotents,
            regulars=pv.regulars, verdicts=fake, q_report=pv.q_report,
        )
        audit = assert_implications([broken])
        violated = {e["rule"] for e in audit["violations"]}
        assert "R16" in violated  # clean ring must have idempotent regular range 1
        entry = next(e for e in audit["violations"] if e["rule"] == "R16")
        assert "CLEAN" in entry["witness"] and "IDEM_REG_RANGE1" in entry["witness"]

    def test_undecided_conclusion_skips_dependent_rules(self, z4):
        # Z4 is regular local and Bezout, so R10/R11 genuinely depend on SR2
        pv = property_vector(z4)
        fake = dict(pv.verdicts)
        fake[P.SR2] = Verdict(P.SR2, None, None, status="undecided-by-search")
        broken = rr.PropertyVector(
            spec=pv.spec, order=pv.order, units=pv.units, idempotents=pv.idempotents,
            regulars=pv.regulars, verdicts=fake, q_report=pv.q_report,
        )
        audit = assert_implications([broken])
        statuses = {e["rule"]: e["status"] for e in audit["implications"]}
        assert statuses["R10"] == "skipped"  # conclusion undecided
        assert statuses["R11"] == "skipped"  # equivalence side undecided
        assert statuses["R16"] == "pass"

    def test_false_hypothesis_passes_vacuously(self, z6):
        # Z6 is not regular local, so R10 holds vacuously even without SR2
        pv = property_vector(z6)
        fake = dict(pv.verdicts)
        fake[P.SR2] = Verdict(P.SR2, None, None, status="undecided-by-search")
        broken = rr.PropertyVector(
            spec=pv.spec, order=pv.order, units=pv.units, idempotents=pv.idempotents,
            regulars=pv.regulars, verdicts=fake, q_report=pv.q_report,
        )
        audit = assert_implications([broken])
        statuses = {e["rule"]: e["status"] for e in audit["implications"]}
        assert statuses["R10"] == "pass"


class TestOpenQuestionMiner:
    def test_empty_on_small_corpus(self, small_vectors):
        _, vectors = small_vectors
        report = mine_open_question(vectors)
        assert report["counterexamples"] == []
        assert "idempotent regular range 1" in report["question"]
        assert "finite" in report["expected_empty_rationale"]

    def test_single_ring_corpus(self, z36):
        report = mine_open_question([property_vector(z36)])
        assert report["counterexamples"] == []

    def test_fabricated_counterexample_is_listed(self, z6):
        pv = property_vector(z6)
        fake = dict(pv.verdicts)
        fake[P.IDEM_REG_RANGE1] = Verdict(P.IDEM_REG_RANGE1, False, {"counterexample": {"a": "0", "b": "1"}})
        broken = rr.PropertyVector(
            spec=pv.spec, order=pv.order, units=pv.units, idempotents=pv.idempotents,
            regulars=pv.regulars, verdicts=fake, q_report=pv.q_report,
        )
        report = mine_open_question([broken])
        assert len(report["counterexamples"]) == 1
        assert report["counterexamples"][0]["ring"] == "Z6"


class TestReports:
    def test_json_reproducible(self):
        cfg = CorpusConfig(max_modular_n=8, product_order_cap=6, poly_bases=(2,), poly_degree_cap=1)
        a = report_to_json(run_corpus(cfg))
        b = report_to_json(run_corpus(cfg))
        assert a == b

    def test_json_schema_fields(self):
        cfg = CorpusConfig(max_modular_n=6, product_order_cap=4, poly_bases=(2,), poly_degree_cap=1)
        report = run_corpus(cfg)
        assert set(report) == {"config", "rings", "implications", "summary", "open_question"}
        ring = report["rings"][0]
        assert set(ring) == {"spec", "order", "units", "idempotents", "regulars", "properties", "q_checks"}
        cell = ring["properties"]["SR1"]
        assert set(cell) == {"holds", "status", "witness"}
        imp = report["implications"][0]
        assert {"rule", "ring", "status"} <= set(imp)

    def test_rings_sorted_by_spec(self):
        cfg = CorpusConfig(max_modular_n=12, product_order_cap=8, poly_bases=(2,), poly_degree_cap=1)
        report = run_corpus(cfg)
        specs = [r["spec"] for r in report["rings"]]
        assert specs == sorted(specs)

    def test_csv_matrix(self):
        cfg = CorpusConfig(max_modular_n=6, product_order_cap=4, poly_bases=(2,), poly_degree_cap=1)
        report = run_corpus(cfg)
        csv = report_to_csv(report)
        lines = csv.strip().split("\n")
        header = lines[0].split(",")
        assert header[:5] == ["spec", "order", "units", "idempotents", "regulars"]
        assert "SR1" in header and "BEZOUT" in header
        assert len(lines) == 1 + len(report["rings"])
        assert '"Z6"' in csv
        for line in lines[1:]:
            cells = line.rsplit(",", len(header) - 1)
            assert all(c in ("true", "false", "undecided-by-search", "timeout") for c in cells[5:])
