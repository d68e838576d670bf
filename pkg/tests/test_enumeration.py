import pytest
from hypothesis import given
from hypothesis import strategies as st

from braid3.enumeration import (
    REASON_LEADING,
    REASON_MWF,
    REASON_PARITY,
    REASON_SEARCH,
    brute_force_orbits,
    braid_index_check_pretzel,
    canonical_key,
    census_classes,
    constructive_orbits,
    enumerate_minimal,
    generate_normal_forms,
    genus_census,
    nondecreasing_words,
    realizable_3braid,
    verify_theorem1,
)
from braid3.errors import CapExceededError
from braid3.hecke import homfly
from braid3.knot_table import make_table
from braid3.laurent import parse_poly
from braid3.words import cyclic_rotate, shift_indices
from braid3.xu import reduce
from conftest import words_st


class TestCanonicalKey:
    @given(words_st, st.integers(0, 11), st.integers(0, 2))
    def test_constant_on_orbits(self, w, r, s):
        assert canonical_key(w) == canonical_key(shift_indices(cyclic_rotate(w, r), s))

    @given(words_st)
    def test_idempotent(self, w):
        assert canonical_key(canonical_key(w)) == canonical_key(w)


class TestGeneration:
    def test_nondecreasing_counts(self):
        assert sum(1 for _ in nondecreasing_words(0)) == 1
        assert sum(1 for _ in nondecreasing_words(1)) == 3
        assert sum(1 for _ in nondecreasing_words(5)) == 3 * 2**4

    def test_generated_words_are_minimal_and_normal(self):
        for n in range(0, 7):
            for kind, word in generate_normal_forms(n):
                nf = reduce(word)
                assert nf.minimal_length == n == len(word)
                assert nf.minimal_word == word
                assert nf.kind == kind

    def test_length_zero(self):
        entries = enumerate_minimal(0)
        assert len(entries) == 1
        assert entries[0].components == 3
        assert entries[0].chi == 3

    def test_cap(self):
        with pytest.raises(CapExceededError):
            enumerate_minimal(15)

    def test_completeness_small(self):
        for n in range(0, 5):
            assert brute_force_orbits(n) == constructive_orbits(n)


class TestSweep:
    def test_theorem1_small(self):
        rep = verify_theorem1(6)
        assert rep.orbit_counts[0] == 1
        assert rep.checked == sum(rep.orbit_counts.values())


class TestCensus:
    def test_genus_zero(self):
        classes = census_classes(genus_census(0))
        assert len(classes) == 1
        assert classes[0][0].polynomial == homfly((1, 2))

    def test_genus_one_names(self):
        table = make_table()
        entries = genus_census(1, table=table)
        names = {e.matched_name for e in entries}
        assert names == {"3_1", "4_1", "5_2"}
        assert len(census_classes(entries)) == 3


class TestRealizability:
    def test_unknot_polynomial(self):
        verdict = realizable_3braid(parse_poly("1"))
        assert verdict.realizable
        assert homfly(verdict.witness) == parse_poly("1")

    def test_trefoil_polynomial(self):
        verdict = realizable_3braid(homfly((1, 1, 1, 2)))
        assert verdict.realizable

    def test_mwf_rejection(self):
        # v-span 8 needs braid index at least 5
        verdict = realizable_3braid(parse_poly("1*v^0*z^0 + 1*v^8*z^0"))
        assert not verdict.realizable and verdict.reason == REASON_MWF

    def test_parity_rejection(self):
        verdict = realizable_3braid(parse_poly("1*v^0*z^0 + 1*v^0*z^1"))
        assert not verdict.realizable and verdict.reason == REASON_PARITY

    def test_leading_class_rejection(self):
        verdict = realizable_3braid(parse_poly("3*v^0*z^2 + 1*v^0*z^0"))
        assert not verdict.realizable and verdict.reason == REASON_LEADING

    def test_search_rejection(self):
        # legal leading shape and span, but not a 3-braid polynomial
        p = homfly((1, 1, 1, 2)) + parse_poly("1*v^2*z^0")
        verdict = realizable_3braid(p)
        assert not verdict.realizable and verdict.reason == REASON_SEARCH

    def test_cap_is_inconclusive(self):
        p = parse_poly("1*v^0*z^40")
        with pytest.raises(CapExceededError):
            realizable_3braid(p, cap=10)


class TestPretzelCheck:
    def test_2222(self):
        rep = braid_index_check_pretzel(2, 2, 2, 2)
        assert rep.mwf_bound == 4
        assert rep.max_deg_v == 7 - rep.chi

    def test_rejects_small_twists(self):
        with pytest.raises(ValueError):
            braid_index_check_pretzel(1, 2, 2, 2)
