"""Kostka polynomials, fiber characters, and fixed-point weight data."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmkostka.characters import (
    character,
    completion_character_check,
    fixed_point_exponents,
    kostka,
    kostka_wreath,
    tangent_weights,
)
from cmkostka.partitions import (
    GammaPartition,
    Partition,
    enumerate_gamma_partitions,
    enumerate_partitions,
    hook_lengths,
    major_index,
    standard_tableaux,
    syt_count,
)
from cmkostka.qpoly import LaurentPoly, evaluate_at_one, qmultinomial


@st.composite
def partitions(draw, max_size=8):
    n = draw(st.integers(min_value=0, max_value=max_size))
    parts = []
    remaining, cap = n, n
    while remaining > 0:
        p = draw(st.integers(min_value=1, max_value=min(cap, remaining)))
        parts.append(p)
        cap = p
        remaining -= p
    return Partition(parts)


def test_kostka_golden_values():
    assert kostka(Partition(())) == LaurentPoly.one()
    assert kostka(Partition((1,))) == LaurentPoly.one()
    assert kostka(Partition((2, 1))).coeffs == {0: 1, 1: 1}
    assert kostka(Partition((3, 1))).coeffs == {0: 1, 1: 1, 2: 1}
    assert kostka(Partition((2, 2))).coeffs == {0: 1, 2: 1}
    assert kostka(Partition((4,))) == LaurentPoly.one()
    assert kostka(Partition((1, 1, 1, 1))) == LaurentPoly.one()


def test_kostka_wreath_golden_values():
    pair = GammaPartition((Partition((1,)), Partition((1,))))
    assert kostka_wreath(pair).coeffs == {0: 1, 1: 1}
    lone = GammaPartition((Partition((2,)), Partition(())))
    assert kostka_wreath(lone) == LaurentPoly.one()
    mixed = GammaPartition((Partition((1, 1)), Partition((1,))))
    assert kostka_wreath(mixed).coeffs == {0: 1, 1: 1, 2: 1}


def test_character_report_golden():
    report = character(Partition((2, 1)))
    assert report.kostka.coeffs == {0: 1, 1: 1}
    assert report.character.coeffs == {-1: 1, 0: 2, 1: 1}
    assert str(report.character) == "q^-1 + 2 + q"
    assert report.dimension == 2


def test_character_accepts_wreath_labels():
    gp = GammaPartition((Partition((1,)), Partition((1,))))
    report = character(gp)
    assert report.character.coeffs == {-1: 1, 0: 2, 1: 1}
    assert report.dimension == 2


def test_character_rejects_other_types():
    with pytest.raises(TypeError):
        character((2, 1))


def test_fixed_point_exponents_golden():
    assert fixed_point_exponents(Partition((2, 1))) == {5, 3, 1}
    assert fixed_point_exponents(Partition((3,))) == {5, 4, 0}
    assert fixed_point_exponents(Partition(()), n=2) == {3, 2}
    assert fixed_point_exponents(Partition((1,))) == {0}


def test_fixed_point_exponents_are_distinct_in_range():
    for n in range(1, 8):
        for lam in enumerate_partitions(n):
            exps = fixed_point_exponents(lam)
            assert len(exps) == n
            assert all(0 <= e < 2 * n for e in exps)


def test_tangent_weights_golden():
    assert tangent_weights(Partition((2, 1))) == (-3, -1, -1)
    assert tangent_weights(Partition((1,))) == (-1,)
    assert tangent_weights(Partition(())) == ()


def test_tangent_weights_match_negated_hooks():
    for n in range(7):
        for lam in enumerate_partitions(n):
            negated = tuple(sorted(-h for h in hook_lengths(lam)))
            assert tangent_weights(lam) == negated


def test_tangent_weights_strictly_negative():
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            assert all(w < 0 for w in tangent_weights(lam))


def test_kostka_value_at_one_counts_tableaux():
    for n in range(9):
        for lam in enumerate_partitions(n):
            assert evaluate_at_one(kostka(lam)) == syt_count(lam)


def test_kostka_conjugation_invariance():
    for n in range(8):
        for lam in enumerate_partitions(n):
            assert kostka(lam) == kostka(lam.conjugate())


def test_kostka_major_index_oracle():
    """The polynomial equals the descent statistic over tableaux, recentred."""
    for n in range(6):
        for lam in enumerate_partitions(n):
            counts = {}
            for rows in standard_tableaux(lam):
                e = major_index(rows) - lam.weighted_size()
                counts[e] = counts.get(e, 0) + 1
            assert kostka(lam) == LaurentPoly(counts)


def test_wreath_factorization():
    for N in (1, 2, 3):
        for n in range(5):
            for gp in enumerate_gamma_partitions(N, n):
                product = qmultinomial(n, [c.size for c in gp.components])
                for comp in gp.components:
                    product = product * kostka(comp)
                assert kostka_wreath(gp) == product


def test_completion_check_accepts_genuine_hooks():
    for n in range(1, 6):
        for lam in enumerate_partitions(n):
            assert completion_character_check(lam, 2 * n + 6)


def test_completion_check_detects_corrupted_hooks():
    lam = Partition((2, 1))
    assert not completion_character_check(lam, 12, hooks=(4, 1, 1))
    with pytest.raises(ValueError):
        completion_character_check(lam, 0)


@settings(deadline=None)
@given(partitions())
def test_kostka_constant_term_and_positivity(lam):
    k = kostka(lam)
    assert k.coeffs.get(0) == 1
    assert k.min_exponent() == 0
    assert all(c > 0 for c in k.coeffs.values())


@settings(deadline=None)
@given(partitions())
def test_character_is_palindromic_with_square_dimension(lam):
    report = character(lam)
    assert report.character.is_palindromic()
    assert evaluate_at_one(report.character) == report.dimension**2
