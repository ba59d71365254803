import math
from itertools import product

import pytest

from bnseries import (
    RamSeq,
    Stratum,
    TwoComponentProblem,
    all_ram_seqs,
    eh_compatible,
    eh_nonempty_two_component,
    enumerate_refined_strata,
    fiber_dim_bound,
    nonempty_criterion,
    refined_complement,
    rho,
    stratum_expected_dim,
    zero_ram,
)
from bnseries.strata import component_problems, glued_problem


def test_compatibility_examples():
    assert eh_compatible(RamSeq((1, 1), 3), RamSeq((1, 1), 3))
    assert not eh_compatible(RamSeq((0, 0), 3), RamSeq((0, 0), 3))
    assert eh_compatible(RamSeq((1, 1), 3), RamSeq((1, 2), 3))


def test_refined_complement_examples():
    assert refined_complement(RamSeq((0, 1), 3)).entries == (1, 2)
    assert refined_complement(RamSeq((2, 2), 3)).entries == (0, 0)
    assert refined_complement(RamSeq((1, 1), 3)).entries == (1, 1)


def test_refined_complement_is_involution():
    for d in range(7):
        for r in range(0, min(2, d) + 1):
            for alpha in all_ram_seqs(r, d):
                assert refined_complement(refined_complement(alpha)) == alpha


def test_stratum_rejects_incompatible_pairs():
    with pytest.raises(ValueError):
        Stratum(RamSeq((0, 0), 3), RamSeq((0, 0), 3))


def test_refined_strata_counts():
    assert len(list(enumerate_refined_strata(1, 3))) == 6
    assert len(list(enumerate_refined_strata(0, 1))) == 2
    assert len(list(enumerate_refined_strata(3, 3))) == 1
    for d in range(7):
        for r in range(0, min(2, d) + 1):
            strata = list(enumerate_refined_strata(r, d))
            assert len(strata) == math.comb(d + 1, r + 1)
            for s in strata:
                assert s.refined
                assert fiber_dim_bound(s) == 0


def test_fiber_bound_examples():
    assert fiber_dim_bound(Stratum(RamSeq((1, 1), 3), RamSeq((1, 2), 3))) == 1
    # excess 2 at each of the two indices
    assert fiber_dim_bound(Stratum(RamSeq((2, 2), 3), RamSeq((2, 2), 3))) == 4


def test_fiber_bound_positive_iff_not_refined():
    for d in range(6):
        for r in range(0, min(2, d) + 1):
            seqs = list(all_ram_seqs(r, d))
            for ay, az in product(seqs, repeat=2):
                if not eh_compatible(ay, az):
                    continue
                s = Stratum(ay, az)
                bound = fiber_dim_bound(s)
                assert bound >= 0
                assert (bound == 0) == s.refined


def test_stratum_expected_dim_example():
    p = TwoComponentProblem(1, 2, 1, 3, zero_ram(1, 3), zero_ram(1, 3))
    s = Stratum(RamSeq((1, 1), 3), RamSeq((1, 1), 3))
    p_y, p_z = component_problems(p, s)
    assert rho(p_y) == 1
    assert rho(p_z) == 0
    assert stratum_expected_dim(p, s) == 1
    # refined stratum: expected dim equals rho of the glued problem
    assert stratum_expected_dim(p, s) == rho(glued_problem(p))


def test_stratum_expected_dim_degenerate_range():
    # d = r: the zero pair is the only stratum and everything is rigid
    p = TwoComponentProblem(0, 0, 2, 2, zero_ram(2, 2), zero_ram(2, 2))
    (s,) = enumerate_refined_strata(2, 2)
    assert stratum_expected_dim(p, s) == 0


def test_bookkeeping_identity_small_grid():
    marked = {
        (1, 3): [((0, 0), (0, 0)), ((0, 1), (1, 1))],
        (0, 2): [((0,), (0,)), ((1,), (2,))],
    }
    for (r, d), pairs in marked.items():
        seqs = list(all_ram_seqs(r, d))
        for a1_entries, a2_entries in pairs:
            a1, a2 = RamSeq(a1_entries, d), RamSeq(a2_entries, d)
            for gy, gz in product(range(3), repeat=2):
                p = TwoComponentProblem(gy, gz, r, d, a1, a2)
                target = rho(glued_problem(p))
                for ay, az in product(seqs, repeat=2):
                    if eh_compatible(ay, az):
                        s = Stratum(ay, az)
                        assert stratum_expected_dim(p, s) + fiber_dim_bound(s) == target


def test_eh_nonempty_examples():
    # both-sided imposed ramification kills the glued genus-2 problem
    p = TwoComponentProblem(1, 1, 1, 2, RamSeq((0, 1), 2), RamSeq((0, 1), 2))
    assert not eh_nonempty_two_component(p, nonempty_criterion)
    assert not nonempty_criterion(glued_problem(p))

    p = TwoComponentProblem(1, 2, 1, 3, zero_ram(1, 3), zero_ram(1, 3))
    assert eh_nonempty_two_component(p, nonempty_criterion)
    # the witness stratum is the self-complementary one
    s = Stratum(RamSeq((1, 1), 3), RamSeq((1, 1), 3))
    p_y, p_z = component_problems(p, s)
    assert nonempty_criterion(p_y) and nonempty_criterion(p_z)


def test_eh_nonempty_zero_node_pair_incompatible():
    # maximal marked ramification forces zero node sequences on both sides,
    # which are incompatible as soon as d > r
    top = RamSeq((2, 2), 3)
    p = TwoComponentProblem(0, 0, 1, 3, top, top)
    assert not eh_compatible(zero_ram(1, 3), zero_ram(1, 3))
    assert not eh_nonempty_two_component(p, nonempty_criterion)
    # for d = r the zero pair is the unique (compatible) stratum
    assert eh_compatible(zero_ram(1, 1), zero_ram(1, 1))
    p_eq = TwoComponentProblem(0, 0, 1, 1, zero_ram(1, 1), zero_ram(1, 1))
    assert eh_nonempty_two_component(p_eq, nonempty_criterion)


def test_eh_nonempty_matches_glued_criterion():
    for gy, gz in product(range(3), repeat=2):
        for d in range(5):
            for r in range(0, min(2, d) + 1):
                seqs = list(all_ram_seqs(r, d))
                for a1 in seqs:
                    for a2 in seqs:
                        p = TwoComponentProblem(gy, gz, r, d, a1, a2)
                        assert eh_nonempty_two_component(
                            p, nonempty_criterion
                        ) == nonempty_criterion(glued_problem(p)), p


def test_injected_oracle_is_used():
    p = TwoComponentProblem(1, 2, 1, 3, zero_ram(1, 3), zero_ram(1, 3))
    assert not eh_nonempty_two_component(p, lambda _: False)
    assert eh_nonempty_two_component(p, lambda _: True)
