"""One-shot verification suite: every module invariant as a named check.

Each check walks its enumerated work items, counts them, and stops at the
first falsified identity, reporting the offending label and both sides.
Randomized checks derive a private generator from the seed and the check
name, so results do not depend on execution order or thread scheduling.
"""

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from .characters import (
    character,
    completion_character_check,
    fixed_point_exponents,
    kostka,
    kostka_wreath,
    tangent_weights,
)
from .cm import (
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
from .partitions import (
    enumerate_gamma_partitions,
    enumerate_partitions,
    gamma_dimension,
    hook_lengths,
    major_index,
    standard_tableaux,
    syt_count,
    syt_enumerate,
)
from .qpoly import (
    LaurentPoly,
    evaluate_at_one,
    exact_divide,
    qmultinomial,
    substitute_inverse,
)
from .schur import expand_p1n, expand_p1n_wreath, multiplicity_identity_check


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check: item count and, on failure, what broke."""

    name: str
    passed: bool
    items: int
    detail: str = ""


@dataclass(frozen=True)
class _Limits:
    n: int | None
    N: int | None
    seed: int
    samples: int
    corrupt_hooks: bool
    max_size: int | None = None

    def cap_n(self, default):
        return default if self.n is None else min(default, self.n)

    def cap_N(self, default):
        return default if self.N is None else max(1, min(default, self.N))

    def rng(self, name):
        return random.Random(f"{self.seed}:{name}")


def _partitions_up_to(bound):
    for n in range(bound + 1):
        yield from enumerate_partitions(n)


def _check_hook_count_and_sum(lim):
    items = 0
    for lam in _partitions_up_to(lim.cap_n(10)):
        items += 1
        hooks = hook_lengths(lam)
        expected = lam.weighted_size() + lam.conjugate().weighted_size() + lam.size
        if len(hooks) != lam.size or sum(hooks) != expected:
            return items, f"lambda={lam}: hooks {hooks} vs size {lam.size}, sum {sum(hooks)} != {expected}"
    return items, ""


def _check_hook_conjugation(lim):
    items = 0
    for lam in _partitions_up_to(lim.cap_n(10)):
        items += 1
        if hook_lengths(lam) != hook_lengths(lam.conjugate()):
            return items, f"lambda={lam}: hooks {hook_lengths(lam)} != conjugate hooks {hook_lengths(lam.conjugate())}"
    return items, ""


def _check_tableau_count_oracle(lim):
    bound = lim.cap_n(10 if lim.max_size is None else min(10, lim.max_size))
    items = 0
    for lam in _partitions_up_to(bound):
        items += 1
        formula = syt_count(lam)
        enumerated = syt_enumerate(lam, max_size=bound)
        if formula != enumerated:
            return items, f"lambda={lam}: hook formula {formula} != corner recursion {enumerated}"
    return items, ""


def _check_tableau_square_sum(lim):
    items = 0
    for n in range(lim.cap_n(10) + 1):
        items += 1
        total = sum(syt_count(lam) ** 2 for lam in enumerate_partitions(n))
        if total != factorial(n):
            return items, f"n={n}: sum of squared tableau counts {total} != {factorial(n)}"
    return items, ""


def _check_wreath_order_sum(lim):
    items = 0
    for N in range(1, lim.cap_N(4) + 1):
        for n in range(lim.cap_n(6) + 1):
            items += 1
            total = sum(gamma_dimension(gp) ** 2 for gp in enumerate_gamma_partitions(N, n))
            expected = N**n * factorial(n)
            if total != expected:
                return items, f"N={N} n={n}: sum of squared dimensions {total} != {expected}"
    return items, ""


def _random_laurent(rng, nonzero=False):
    while True:
        support = rng.sample(range(-6, 7), rng.randint(1, 4))
        poly = LaurentPoly({e: rng.randint(-5, 5) for e in support})
        if poly or not nonzero:
            return poly


def _check_division_round_trip(lim):
    rng = lim.rng("division-round-trip")
    items = 0
    for _ in range(60):
        items += 1
        a = _random_laurent(rng)
        b = _random_laurent(rng, nonzero=True)
        if exact_divide(a * b, b) != a:
            return items, f"(a*b)/b != a for a = {a}, b = {b}"
    return items, ""


def _check_inverse_substitution(lim):
    rng = lim.rng("inverse-substitution")
    items = 0
    for _ in range(60):
        items += 1
        a = _random_laurent(rng)
        b = _random_laurent(rng)
        if substitute_inverse(substitute_inverse(a)) != a:
            return items, f"double inversion changed {a}"
        if substitute_inverse(a * b) != substitute_inverse(a) * substitute_inverse(b):
            return items, f"inversion not multiplicative on a = {a}, b = {b}"
        if substitute_inverse(a + b) != substitute_inverse(a) + substitute_inverse(b):
            return items, f"inversion not additive on a = {a}, b = {b}"
    return items, ""


def _check_evaluation_multiplicative(lim):
    rng = lim.rng("evaluation-multiplicative")
    items = 0
    for _ in range(60):
        items += 1
        a = _random_laurent(rng)
        b = _random_laurent(rng)
        if evaluate_at_one(a * b) != evaluate_at_one(a) * evaluate_at_one(b):
            return items, f"value at 1 not multiplicative on a = {a}, b = {b}"
    return items, ""


def _check_tangent_negated_hooks(lim):
    items = 0
    for lam in _partitions_up_to(lim.cap_n(8)):
        items += 1
        weights = tangent_weights(lam)
        negated = tuple(sorted(-h for h in hook_lengths(lam)))
        if weights != negated:
            return items, f"lambda={lam}: tangent weights {weights} != negated hooks {negated}"
    return items, ""


def _check_tangent_sign_split(lim):
    items = 0
    for lam in _partitions_up_to(lim.cap_n(8)):
        items += 1
        weights = tangent_weights(lam)
        if any(w >= 0 for w in weights):
            return items, f"lambda={lam}: nonnegative tangent weight in {weights}"
        if set(weights) & {-w for w in weights}:
            return items, f"lambda={lam}: weight sets of the two projections overlap"
    return items, ""


def _check_kostka_normalization(lim):
    items = 0
    for lam in _partitions_up_to(lim.cap_n(10)):
        items += 1
        k = kostka(lam)
        if k.coeffs.get(0) != 1 or k.min_exponent() != 0:
            return items, f"lambda={lam}: constant term of {k} is not 1"
        if any(c < 0 for c in k.coeffs.values()):
            return items, f"lambda={lam}: negative coefficient in {k}"
    return items, ""


def _check_kostka_dimension(lim):
    items = 0
    for lam in _partitions_up_to(lim.cap_n(10)):
        items += 1
        value = evaluate_at_one(kostka(lam))
        expected = syt_count(lam)
        if value != expected:
            return items, f"lambda={lam}: value at 1 is {value}, tableau count {expected}"
    return items, ""


def _check_kostka_conjugation(lim):
    items = 0
    for lam in _partitions_up_to(lim.cap_n(10)):
        items += 1
        if kostka(lam) != kostka(lam.conjugate()):
            return items, f"lambda={lam}: polynomial differs from conjugate's"
    return items, ""


def _check_kostka_major_index(lim):
    items = 0
    for lam in _partitions_up_to(lim.cap_n(7)):
        items += 1
        shift = lam.weighted_size()
        counts = {}
        for rows in standard_tableaux(lam):
            e = major_index(rows) - shift
            counts[e] = counts.get(e, 0) + 1
        oracle = LaurentPoly(counts)
        k = kostka(lam)
        if k != oracle:
            return items, f"lambda={lam}: {k} != major-index polynomial {oracle}"
    return items, ""


def _check_wreath_kostka_factorization(lim):
    items = 0
    for N in range(1, lim.cap_N(3) + 1):
        for n in range(lim.cap_n(6) + 1):
            for gp in enumerate_gamma_partitions(N, n):
                items += 1
                sizes = [c.size for c in gp.components]
                product = qmultinomial(n, sizes)
                for comp in gp.components:
                    product = product * kostka(comp)
                whole = kostka_wreath(gp)
                if whole != product:
                    return items, f"Lambda={gp}: {whole} != factored form {product}"
    return items, ""


def _check_character_palindrome_square(lim):
    items = 0
    for lam in _partitions_up_to(lim.cap_n(10)):
        items += 1
        report = character(lam)
        if not report.character.is_palindromic():
            return items, f"lambda={lam}: character {report.character} not palindromic"
        if evaluate_at_one(report.character) != report.dimension**2:
            return items, (
                f"lambda={lam}: character at 1 is {evaluate_at_one(report.character)},"
                f" dimension squared {report.dimension ** 2}"
            )
    return items, ""


def _check_completion_series(lim):
    items = 0
    for lam in _partitions_up_to(lim.cap_n(6)):
        if lam.size == 0:
            continue
        items += 1
        order = 2 * lam.size + 6
        hooks = None
        if lim.corrupt_hooks:
            genuine = hook_lengths(lam)
            hooks = (genuine[0] + 1,) + genuine[1:]
        if not completion_character_check(lam, order, hooks=hooks):
            return items, (
                f"lambda={lam}: truncated hook series times the q-factorial"
                f" disagrees with the polynomial through order {order}"
            )
    return items, ""


def _check_multiplicity_hook_oracle(lim):
    items = 0
    for n in range(1, lim.cap_n(8) + 1):
        expansion = expand_p1n(n)
        for lam in enumerate_partitions(n):
            items += 1
            m = expansion.coefficients.get(lam, 0)
            expected = syt_count(lam)
            if m != expected:
                return items, f"lambda={lam}: path count {m} != hook formula {expected}"
    return items, ""


def _check_multiplicity_square_sum(lim):
    items = 0
    for n in range(1, lim.cap_n(8) + 1):
        items += 1
        total = expand_p1n(n).sum_of_squares()
        if total != factorial(n):
            return items, f"n={n}: sum of squared multiplicities {total} != {factorial(n)}"
    return items, ""


def _check_wreath_multiplicity_square_sum(lim):
    items = 0
    for N in range(1, lim.cap_N(3) + 1):
        for n in range(1, lim.cap_n(5) + 1):
            items += 1
            total = expand_p1n_wreath(N, n).sum_of_squares()
            expected = N**n * factorial(n)
            if total != expected:
                return items, f"N={N} n={n}: sum of squared multiplicities {total} != {expected}"
    return items, ""


def _check_wreath_slot_symmetry(lim):
    items = 0
    for N in range(2, lim.cap_N(3) + 1):
        for n in range(1, lim.cap_n(5) + 1):
            expansion = expand_p1n_wreath(N, n)
            for perm in permutations(range(N)):
                items += 1
                relabeled = {gp.permuted(perm): m for gp, m in expansion.coefficients.items()}
                if relabeled != expansion.coefficients:
                    return items, f"N={N} n={n}: slot permutation {perm} changed the expansion"
    return items, ""


def _check_wreath_dimension_chain(lim):
    items = 0
    for N in range(1, lim.cap_N(4) + 1):
        for n in range(lim.cap_n(6) + 1):
            items += 1
            if not multiplicity_identity_check(N, n):
                return items, f"N={N} n={n}: dimension bookkeeping failed"
    return items, ""


def _random_points(rng, count, max_n):
    points = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        den = rng.choice((1, 2, 3))
        numerators = rng.sample(range(-4 * max_n - 4, 4 * max_n + 5), n)
        y = [Fraction(v, den) for v in numerators]
        alpha = [Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))) for _ in range(n)]
        points.append(CMPointRegular(y, alpha))
    return points


def _check_rank_one_random_points(lim):
    rng = lim.rng("rank-one-random-points")
    items = 0
    for point in _random_points(rng, lim.samples, lim.cap_n(12)):
        items += 1
        ok, m, witness = verify_cm(*wilson_representative(point))
        if not ok:
            return items, f"y={[str(v) for v in point.y]}: commutator plus identity has rank {m.rank()}"
        column, row = witness
        product = [[c * r for r in row] for c in column]
        if any(product[i][j] != m.entries[i][j] for i in range(m.rows) for j in range(m.cols)):
            return items, f"y={[str(v) for v in point.y]}: witness does not factor the matrix"
    return items, ""


def _check_scaling_preserves_rank_one(lim):
    rng = lim.rng("scaling-preserves-rank-one")
    items = 0
    for point in _random_points(rng, lim.samples, lim.cap_n(12)):
        items += 1
        x, y = wilson_representative(point)
        c = Fraction(rng.choice((-1, 1)) * rng.randint(1, 5), rng.choice((1, 2, 3)))
        if not verify_cm(*cstar_act(c, x, y))[0]:
            return items, f"y={[str(v) for v in point.y]}, c={c}: scaling broke the rank-one condition"
    return items, ""


def _check_involution_preserves_rank_one(lim):
    rng = lim.rng("involution-preserves-rank-one")
    items = 0
    for point in _random_points(rng, lim.samples, lim.cap_n(12)):
        items += 1
        x, y = wilson_representative(point)
        if not verify_cm(*involution(x, y))[0]:
            return items, f"y={[str(v) for v in point.y]}: involution broke the rank-one condition"
        xi, yi = involution(*involution(x, y))
        if xi != x or yi != y:
            return items, f"y={[str(v) for v in point.y]}: applying the involution twice changed the pair"
    return items, ""


def _check_eigenvalue_polynomial(lim):
    rng = lim.rng("eigenvalue-polynomial")
    items = 0
    for point in _random_points(rng, lim.samples, lim.cap_n(12)):
        items += 1
        x, y = wilson_representative(point)
        _, char_y = projections(x, y)
        expected = poly_from_roots(point.y)
        if char_y != expected:
            return items, f"y={[str(v) for v in point.y]}: characteristic polynomial mismatch"
    return items, ""


def _check_profile_round_trip(lim):
    items = 0
    for n in range(1, lim.cap_n(6) + 1):
        for lam in enumerate_partitions(n):
            items += 1
            exponents = fixed_point_exponents(lam)
            subspace = monomial_subspace(exponents, 2 * n)
            recovered = schubert_profile(subspace)
            if recovered != lam:
                return items, f"lambda={lam}: profile of its fixed subspace came back as {recovered}"
    return items, ""


def _check_embedding_component_lines(lim):
    rng = lim.rng("embedding-component-lines")
    items = 0
    for point in _random_points(rng, 30, min(5, lim.cap_n(12))):
        embedded = wilson_embed(point)
        for y_i, a_i in zip(point.y, point.alpha):
            items += 1
            line = component_line(embedded, y_i)
            if line != (Fraction(1), -a_i):
                return items, f"y_i={y_i}: projected line {line} != (1, {-a_i})"
    return items, ""


def _check_embedding_block_factorization(lim):
    rng = lim.rng("embedding-block-factorization")
    items = 0
    max_n = min(4, lim.cap_n(12))
    for _ in range(20):
        items += 1
        m = rng.randint(1, max_n)
        k = rng.randint(1, max_n)
        den = rng.choice((1, 2))
        numerators = rng.sample(range(-30, 31), m + k)
        first = CMPointRegular(
            [Fraction(v, den) for v in numerators[:m]],
            [Fraction(rng.randint(-6, 6)) for _ in range(m)],
        )
        second = CMPointRegular(
            [Fraction(v, den) for v in numerators[m:]],
            [Fraction(rng.randint(-6, 6)) for _ in range(k)],
        )
        joint = wilson_embed(first.concatenated(second))
        if joint.ideal != tuple(poly_mul(list(wilson_embed(first).ideal), list(wilson_embed(second).ideal))):
            return items, "joint ideal is not the product of the two factors"
        for part in (first, second):
            small = wilson_embed(part)
            for y_i in part.y:
                if component_line(joint, y_i) != component_line(small, y_i):
                    return items, f"component line at {y_i} differs between joint and factor embeddings"
    return items, ""


_REGISTRY = (
    ("hook-count-and-sum", _check_hook_count_and_sum),
    ("hook-conjugation-invariance", _check_hook_conjugation),
    ("tableau-count-oracle", _check_tableau_count_oracle),
    ("tableau-square-sum", _check_tableau_square_sum),
    ("wreath-order-sum", _check_wreath_order_sum),
    ("division-round-trip", _check_division_round_trip),
    ("inverse-substitution", _check_inverse_substitution),
    ("evaluation-multiplicative", _check_evaluation_multiplicative),
    ("tangent-weights-negated-hooks", _check_tangent_negated_hooks),
    ("tangent-weights-sign-split", _check_tangent_sign_split),
    ("kostka-normalization", _check_kostka_normalization),
    ("kostka-dimension-at-one", _check_kostka_dimension),
    ("kostka-conjugation-invariance", _check_kostka_conjugation),
    ("kostka-major-index-oracle", _check_kostka_major_index),
    ("wreath-kostka-factorization", _check_wreath_kostka_factorization),
    ("character-palindrome-square", _check_character_palindrome_square),
    ("completion-series-consistency", _check_completion_series),
    ("multiplicity-hook-oracle", _check_multiplicity_hook_oracle),
    ("multiplicity-square-sum", _check_multiplicity_square_sum),
    ("wreath-multiplicity-square-sum", _check_wreath_multiplicity_square_sum),
    ("wreath-slot-symmetry", _check_wreath_slot_symmetry),
    ("wreath-dimension-chain", _check_wreath_dimension_chain),
    ("rank-one-random-points", _check_rank_one_random_points),
    ("scaling-preserves-rank-one", _check_scaling_preserves_rank_one),
    ("involution-preserves-rank-one", _check_involution_preserves_rank_one),
    ("eigenvalue-polynomial-match", _check_eigenvalue_polynomial),
    ("profile-round-trip", _check_profile_round_trip),
    ("embedding-component-lines", _check_embedding_component_lines),
    ("embedding-block-factorization", _check_embedding_block_factorization),
)


def check_names():
    return tuple(name for name, _ in _REGISTRY)


def run_checks(
    names=None, n=None, N=None, seed=0, samples=200, threads=1, corrupt_hooks=False, max_size=None
):
    """Run the named checks (all by default) and return their results in registry order."""
    lim = _Limits(
        n=n, N=N, seed=seed, samples=samples, corrupt_hooks=corrupt_hooks, max_size=max_size
    )
    selected = [(name, fn) for name, fn in _REGISTRY if names is None or name in names]
    if names is not None:
        unknown = set(names) - {name for name, _ in _REGISTRY}
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")

    def run_one(entry):
        name, fn = entry
        items, detail = fn(lim)
        return CheckResult(name=name, passed=not detail, items=items, detail=detail)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(run_one, selected))
    return [run_one(entry) for entry in selected]


def verify_all(n=None, N=None, seed=0, samples=200, threads=1, corrupt_hooks=False, max_size=None):
    """Run every registered check; the full-suite entry point behind the CLI."""
    return run_checks(
        n=n,
        N=N,
        seed=seed,
        samples=samples,
        threads=threads,
        corrupt_hooks=corrupt_hooks,
        max_size=max_size,
    )
