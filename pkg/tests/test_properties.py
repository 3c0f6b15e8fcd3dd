import pytest

import ringrange as rr
from ringrange import CapExceededError, PropertyId as P, decide, decide_hermite
from ringrange.properties import (
    bezout_first_violation,
    hermite_matrix_oracle,
    hermite_pair_factor,
)
from ringrange import _kernels
from conftest import get_ring


class TestFrozenVerdicts:
    def test_sr1_z6_holds(self, z6):
        v = decide(P.SR1, z6)
        assert v.holds and v.status == "decided"

    def test_sr1_pair_witness_2_3_z6(self, z6):
        # the shortening 2 + 3*1 = 5 is a unit
        t = 1
        assert z6.unit_mask[z6.add_i(2, z6.mul_i(3, t))]

    def test_reg_local_z6_fails_at_3(self, z6):
        v = decide(P.REG_LOCAL, z6)
        assert not v.holds
        assert v.witness["counterexample"] == {"a": "3"}

    def test_reg_local_z4_holds(self, z4):
        assert decide(P.REG_LOCAL, z4).holds

    def test_sh_local_z36_fails_at_2_3(self, z36):
        v = decide(P.SH_LOCAL, z36)
        assert not v.holds
        assert v.witness["counterexample"] == {"a": "2", "b": "3"}

    def test_sh_range1_z36_holds(self, z36):
        assert decide(P.SH_RANGE1, z36).holds

    def test_bezout_p16_fails_at_2_x(self, p16):
        v = decide(P.BEZOUT, p16)
        assert not v.holds
        assert v.witness["counterexample"] == {"a": "2", "b": "x"}

    def test_hermite_p16_fails_at_2_x(self, p16):
        v = decide_hermite(p16)
        assert not v.holds
        assert v.witness["counterexample"] == {"a": "2", "b": "x"}

    def test_z36_vector_highlights(self, z36):
        assert decide(P.SH_LOCAL, z36).holds is False
        assert decide(P.SH_RANGE1, z36).holds is True
        assert decide(P.BEZOUT, z36).holds is True
        assert decide(P.HERMITE, z36).holds is True

    def test_p16_vector_highlights(self, p16):
        assert decide(P.BEZOUT, p16).holds is False
        assert decide(P.HERMITE, p16).holds is False
        assert decide(P.LOCAL, p16).holds is True
        assert decide(P.REG_LOCAL, p16).holds is True

    def test_field_satisfies_everything(self, z7):
        for prop in P:
            assert decide(prop, z7).holds, prop

    def test_idem_reg_range1_z36(self, z36):
        assert decide(P.IDEM_REG_RANGE1, z36).holds


class TestDeterminism:
    def test_identical_verdicts_on_repeat(self, z36, p16):
        for ring in (z36, p16):
            for prop in P:
                assert decide(prop, ring) == decide(prop, ring)

    def test_product_isomorph_agrees_with_z36(self, z36, z4x9):
        for prop in P:
            assert decide(prop, z36).holds == decide(prop, z4x9).holds, prop


class TestEquivalenceIdentities:
    def test_sr1_equals_vnr_range1(self, small_corpus):
        for ring in small_corpus:
            assert decide(P.SR1, ring).holds == decide(P.VNR_RANGE1, ring).holds, ring.label

    def test_reg_range1_equals_sh_range1(self, small_corpus):
        for ring in small_corpus:
            assert decide(P.REG_RANGE1, ring).holds == decide(P.SH_RANGE1, ring).holds, ring.label

    def test_hermite_implies_bezout(self, small_corpus):
        for ring in small_corpus:
            if decide(P.HERMITE, ring).holds:
                assert decide(P.BEZOUT, ring).holds, ring.label

    def test_hermite_equals_bezout_and_sr2(self, small_corpus):
        for ring in small_corpus:
            h = decide_hermite(ring).holds
            b = decide(P.BEZOUT, ring).holds
            s2 = decide(P.SR2, ring).holds
            assert h == (b and s2), ring.label


class TestHermiteRoutes:
    def test_pair_factor_4_6_z36(self, z36):
        d, a1, b1 = hermite_pair_factor(z36.element(4), z36.element(6))
        assert (d.i, a1.i, b1.i) == (2, 2, 3)

    def test_pair_factor_absent_2_x(self, p16):
        assert hermite_pair_factor(p16.element(2), p16.element((0, 1))) is None

    def test_matrix_oracle_agreement_small(self):
        for spec in ("Z2", "Z3", "Z4", "Z6", "Z8", "Z12", "Z16", "Z2 x Z2", "Z2 x Z8",
                     "Z2[x]/(x^2)", "Z3[x]/(x^2)", "Z4[x]/(x^2)", "Z2[x]/(x^2+x+1)"):
            ring = get_ring(spec)
            assert hermite_matrix_oracle(ring).holds == decide_hermite(ring).holds, spec

    def test_matrix_oracle_cap(self):
        with pytest.raises(CapExceededError):
            hermite_matrix_oracle(get_ring("Z36"))

    def test_field_trivially_hermite(self, z7):
        assert decide_hermite(z7).holds


class TestCaps:
    def test_sr2_cap_raises(self):
        ring = get_ring("Z72")
        with pytest.raises(CapExceededError):
            decide(P.SR2, ring, sr2_cap=64)

    def test_sr2_within_cap(self, z36):
        assert decide(P.SR2, z36, sr2_cap=64).holds


class TestWitnessSoundness:
    """Witness re-verification runs on every decide call in verify mode;
    these assert the embedded content directly on known cases."""

    def test_sh_local_counterexample_content(self, z36):
        v = decide(P.SH_LOCAL, z36)
        a = z36.element(2)
        b = z36.element(3)
        assert rr.is_unimodular(a, b)
        assert not z36.sh_mask[a.i] and not z36.sh_mask[b.i]

    def test_bezout_counterexample_reverifies(self, p16):
        pair = bezout_first_violation(p16)
        assert pair == (2, 4)  # (2, x)
        assert rr.bezout_pair(p16.element(2), p16.element(4)) is None

    def test_holds_witnesses_present(self, z36):
        for prop in P:
            v = decide(prop, z36)
            if v.holds:
                assert v.witness is not None


def test_concurrent_readers_share_one_ring():
    """Lazy caches fill once; parallel deciders on a shared ring agree."""
    from concurrent.futures import ThreadPoolExecutor

    ring = rr.realize("Z30")

    def work(prop):
        return prop, decide(prop, ring)

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = dict(pool.map(work, list(P) * 4))
    for prop, verdict in results.items():
        assert verdict == decide(prop, ring)


@pytest.mark.skipif(len(_kernels.available()) < 2, reason="compiled kernels not built")
def test_backend_parity_full_verdicts(small_corpus):
    """Both kernel backends must produce identical verdicts, witness for witness."""
    rings = small_corpus[:8] + [get_ring("Z36"), get_ring("Z4[x]/(x^2)")]
    previous = _kernels.active_name()
    results = {}
    try:
        for backend in _kernels.available():
            _kernels.use(backend)
            for ring in rings:
                ring._cache.pop("unimodular", None)
                for prop in P:
                    v = decide(prop, ring)
                    key = (ring.label, prop)
                    results.setdefault(key, {})[backend] = v
    finally:
        _kernels.use(previous)
    for key, by_backend in results.items():
        vals = list(by_backend.values())
        assert all(v == vals[0] for v in vals[1:]), key
