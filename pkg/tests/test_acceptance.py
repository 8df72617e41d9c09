"""Acceptance suite: one test per criterion, each timed against its budget.

Every test records a single pass/fail line (shown in the terminal summary)
and then asserts, so a falsified identity and a blown time budget are both
visible in the same place.
"""

import random
from fractions import Fraction
from math import factorial
from time import perf_counter

from cmkostka.characters import character, fixed_point_exponents, kostka, kostka_wreath, tangent_weights
from cmkostka.cm import (
    CMPointRegular,
    component_line,
    cstar_act,
    involution,
    monomial_subspace,
    poly_from_roots,
    poly_mul,
    projections,
    schubert_profile,
    verify_cm,
    wilson_embed,
    wilson_representative,
)
from cmkostka.partitions import (
    Partition,
    enumerate_gamma_partitions,
    enumerate_partitions,
    gamma_dimension,
    hook_lengths,
    major_index,
    standard_tableaux,
    syt_count,
    syt_enumerate,
)
from cmkostka.qpoly import LaurentPoly, NonExactDivision, evaluate_at_one
from cmkostka.schur import expand_p1n

SEED = 20260817


def _all_partitions(max_n, min_n=0):
    for n in range(min_n, max_n + 1):
        yield from enumerate_partitions(n)


def _finish(record, number, title, budget, started, items, failures):
    elapsed = perf_counter() - started
    ok = not failures and elapsed < budget
    status = "PASS" if ok else "FAIL"
    record(
        f"criterion {number}, {title}: {status}"
        f" ({items} items, {elapsed:.2f}s, budget {budget:.0f}s)"
    )
    assert not failures, failures[:3]
    assert elapsed < budget, f"criterion {number} took {elapsed:.2f}s, budget {budget}s"


def test_criterion_1_main_character_values(acceptance_report):
    started = perf_counter()
    failures = []
    golden = character(Partition((2, 1)))
    if str(golden.character) != "q^-1 + 2 + q":
        failures.append(f"character of 2,1 rendered as {golden.character}")
    items = 0
    for lam in _all_partitions(10):
        items += 1
        report = character(lam)
        if evaluate_at_one(report.character) != syt_count(lam) ** 2:
            failures.append(f"lambda={lam}: character at 1 is not the squared dimension")
    _finish(acceptance_report, 1, "main-theorem character values", 5.0, started, items, failures)


def test_criterion_2_tangent_weights_are_negated_hooks(acceptance_report):
    started = perf_counter()
    failures = []
    items = 0
    for lam in _all_partitions(8):
        items += 1
        expected = tuple(sorted(-h for h in hook_lengths(lam)))
        if tangent_weights(lam) != expected:
            failures.append(f"lambda={lam}: {tangent_weights(lam)} != {expected}")
    _finish(acceptance_report, 2, "tangent weights equal negated hooks", 5.0, started, items, failures)


def test_criterion_3_kostka_exactness_and_positivity(acceptance_report):
    started = perf_counter()
    failures = []
    items = 0
    for lam in _all_partitions(10):
        items += 1
        try:
            k = kostka(lam)
        except NonExactDivision:
            failures.append(f"lambda={lam}: division not exact")
            continue
        if k.coeffs.get(0) != 1 or k.min_exponent() != 0:
            failures.append(f"lambda={lam}: constant term is not 1")
        if any(c < 0 for c in k.coeffs.values()):
            failures.append(f"lambda={lam}: negative coefficient")
        if evaluate_at_one(k) != syt_count(lam):
            failures.append(f"lambda={lam}: value at 1 differs from tableau count")
        if lam.size <= 8 and evaluate_at_one(k) != syt_enumerate(lam, max_size=8):
            failures.append(f"lambda={lam}: value at 1 differs from enumerated count")
    _finish(acceptance_report, 3, "Kostka exactness and positivity", 30.0, started, items, failures)


def test_criterion_4_multiplicity_identities(acceptance_report):
    started = perf_counter()
    failures = []
    items = 0
    for n in range(1, 9):
        expansion = expand_p1n(n)
        for lam in enumerate_partitions(n):
            items += 1
            if expansion.coefficients.get(lam, 0) != syt_count(lam):
                failures.append(f"lambda={lam}: coefficient differs from tableau count")
        if expansion.sum_of_squares() != factorial(n):
            failures.append(f"n={n}: sum of squared multiplicities is not {n}!")
    _finish(acceptance_report, 4, "power-sum multiplicity identities", 10.0, started, items, failures)


def test_criterion_5_wreath_identities(acceptance_report):
    started = perf_counter()
    failures = []
    items = 0
    for N in range(1, 5):
        for n in range(7):
            square_sum = 0
            for gp in enumerate_gamma_partitions(N, n):
                items += 1
                hook_product = 1
                for comp in gp.components:
                    for h in hook_lengths(comp):
                        hook_product *= h
                quotient, remainder = divmod(factorial(n), hook_product)
                if remainder:
                    failures.append(f"Lambda={gp}: hook product does not divide {n}!")
                    continue
                if quotient != gamma_dimension(gp):
                    failures.append(f"Lambda={gp}: hook quotient differs from dimension")
                if quotient != evaluate_at_one(kostka_wreath(gp)):
                    failures.append(f"Lambda={gp}: polynomial at 1 differs from dimension")
                square_sum += quotient * quotient
            if square_sum != N**n * factorial(n):
                failures.append(f"N={N} n={n}: squared dimensions sum to {square_sum}")
    _finish(acceptance_report, 5, "wreath dimension identities", 60.0, started, items, failures)


def test_criterion_6_rank_one_matrix_pairs(acceptance_report):
    started = perf_counter()
    failures = []
    rng = random.Random(SEED)
    items = 0
    for _ in range(200):
        items += 1
        n = rng.randint(1, 12)
        den = rng.choice((1, 2, 3))
        numerators = rng.sample(range(-60, 61), n)
        point = CMPointRegular(
            [Fraction(v, den) for v in numerators],
            [Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))) for _ in range(n)],
        )
        x, y = wilson_representative(point)
        ok, m, witness = verify_cm(x, y)
        if not ok:
            failures.append(f"n={n}: rank is not one")
            continue
        column, row = witness
        if any(column[i] * row[j] != m.entries[i][j] for i in range(n) for j in range(n)):
            failures.append(f"n={n}: witness does not factor the matrix")
        if not verify_cm(*involution(x, y))[0]:
            failures.append(f"n={n}: involution broke the condition")
        c = Fraction(rng.choice((-1, 1)) * rng.randint(1, 7), rng.choice((1, 2)))
        if not verify_cm(*cstar_act(c, x, y))[0]:
            failures.append(f"n={n}: scaling by {c} broke the condition")
        if projections(x, y)[1] != poly_from_roots(point.y):
            failures.append(f"n={n}: eigenvalue polynomial mismatch")
    _finish(acceptance_report, 6, "rank-one matrix pairs at size <= 12", 60.0, started, items, failures)


def test_criterion_7_profile_and_embedding_round_trips(acceptance_report):
    started = perf_counter()
    failures = []
    items = 0
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            items += 1
            subspace = monomial_subspace(fixed_point_exponents(lam), 2 * n)
            if schubert_profile(subspace) != lam:
                failures.append(f"lambda={lam}: profile round trip failed")
    rng = random.Random(SEED)
    for _ in range(25):
        items += 1
        m = rng.randint(1, 3)
        k = rng.randint(1, 3)
        numerators = rng.sample(range(-25, 26), m + k)
        first = CMPointRegular(numerators[:m], [rng.randint(-5, 5) for _ in range(m)])
        second = CMPointRegular(numerators[m:], [rng.randint(-5, 5) for _ in range(k)])
        joint = wilson_embed(first.concatenated(second))
        for part in (first, second):
            small = wilson_embed(part)
            for y_i, a_i in zip(part.y, part.alpha):
                if component_line(joint, y_i) != (1, Fraction(-a_i)):
                    failures.append(f"line at {y_i} differs from its defining congruence")
                if component_line(joint, y_i) != component_line(small, y_i):
                    failures.append(f"line at {y_i} differs between joint and factor")
        expected = tuple(poly_mul(list(wilson_embed(first).ideal), list(wilson_embed(second).ideal)))
        if joint.ideal != expected:
            failures.append("joint ideal is not the product of the factors")
    _finish(acceptance_report, 7, "profile and embedding round trips", 30.0, started, items, failures)


def test_criterion_8_major_index_oracle(acceptance_report):
    started = perf_counter()
    failures = []
    items = 0
    for lam in _all_partitions(7):
        items += 1
        counts = {}
        for rows in standard_tableaux(lam):
            e = major_index(rows) - lam.weighted_size()
            counts[e] = counts.get(e, 0) + 1
        if kostka(lam) != LaurentPoly(counts):
            failures.append(f"lambda={lam}: polynomial differs from the descent statistic")
    _finish(acceptance_report, 8, "major-index oracle", 30.0, started, items, failures)
