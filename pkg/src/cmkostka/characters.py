"""Kostka polynomials, their wreath generalization, and torus weight data.

The normalization used throughout: K has constant term 1, and the weight of
the line spanned by z^a under the contracting torus action is -a.
"""

from dataclasses import dataclass

from .partitions import GammaPartition, Partition, hook_lengths
from .qpoly import (
    LaurentPoly,
    evaluate_at_one,
    exact_divide,
    geometric_product_series,
    one_minus_q,
    qfactorial_product,
    substitute_inverse,
)


@dataclass(frozen=True)
class CharacterReport:
    """Kostka polynomial, fiber character, and dimension for one label.

    The character is kostka times its image under q -> 1/q, hence palindromic,
    and its value at q = 1 is the square of the dimension.
    """

    label: object  # Partition or GammaPartition
    kostka: LaurentPoly
    character: LaurentPoly
    dimension: int


def _hook_denominator(hooks):
    den = LaurentPoly.one()
    for h in hooks:
        den = den * one_minus_q(h)
    return den


def kostka(lam):
    """Kostka polynomial of a partition, normalized to constant term 1.

    (1-q)...(1-q^n) divided exactly by prod over cells of (1 - q^hook).
    """
    n = lam.size
    return exact_divide(qfactorial_product(n), _hook_denominator(hook_lengths(lam)))


def kostka_wreath(gp):
    """Wreath Kostka polynomial of an N-tuple of partitions.

    Same shape of formula with n the total size and the hook product running
    over the cells of every component.
    """
    n = gp.size
    hooks = []
    for comp in gp.components:
        hooks.extend(hook_lengths(comp))
    return exact_divide(qfactorial_product(n), _hook_denominator(hooks))


def character(label):
    """Zero-fiber character report for a Partition or GammaPartition label."""
    if isinstance(label, Partition):
        k = kostka(label)
    elif isinstance(label, GammaPartition):
        k = kostka_wreath(label)
    else:
        raise TypeError(f"expected Partition or GammaPartition, got {type(label).__name__}")
    ch = k * substitute_inverse(k)
    return CharacterReport(label=label, kostka=k, character=ch, dimension=evaluate_at_one(k))


def fixed_point_exponents(lam, n=None):
    """Monomial exponents spanning the torus-fixed subspace attached to the partition.

    With parts padded increasing to length n, the exponents are 2n - l_i - i
    for i = 1..n; they are n distinct values in [0, 2n-1].  n defaults to the
    partition size and must be at least the number of parts.
    """
    if n is None:
        n = lam.size
    padded = lam.padded_increasing(n)
    return {2 * n - padded[i - 1] - i for i in range(1, n + 1)}


def tangent_weights(lam):
    """Torus weights on the tangent space of the Schubert cell at its fixed point.

    For each basis exponent a_i (decreasing), one Hom line to every larger
    exponent b <= 2n-1 not itself a basis exponent a_k with k < i; each line
    contributes weight a_i - b.  Returns the multiset as an increasing tuple
    of exactly n strictly negative integers.
    """
    n = lam.size
    padded = lam.padded_increasing(n)
    a = [2 * n - padded[i - 1] - i for i in range(1, n + 1)]
    weights = []
    for i in range(n):
        used = set(a[:i])
        for b in range(a[i] + 1, 2 * n):
            if b not in used:
                weights.append(a[i] - b)
    return tuple(sorted(weights))


def completion_character_check(lam, order, hooks=None):
    """Check, through q^order, that the hook geometric series times
    (1-q)...(1-q^n) reproduces the Kostka polynomial.

    hooks overrides the diagram's hook multiset (forcing a failure is useful
    for exercising the reporting path); the genuine multiset always passes.
    """
    if order < 1:
        raise ValueError("order must be positive")
    if hooks is None:
        hooks = hook_lengths(lam)
    n = lam.size
    series = geometric_product_series(hooks, order)
    lhs = (series * qfactorial_product(n)).truncated(order)
    rhs = kostka(lam).truncated(order)
    return lhs == rhs
