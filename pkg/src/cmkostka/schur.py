"""Schur-basis expansion of powers of the first power sum.

The expansion is computed by iterated Pieri steps, i.e. by counting paths in
Young's lattice (or in a product of N copies of it), which keeps the hook
length formula available as an independent oracle for the coefficients.
"""

from dataclasses import dataclass
from math import factorial

from .characters import kostka_wreath
from .partitions import (
    GammaPartition,
    Partition,
    enumerate_gamma_partitions,
    gamma_dimension,
    hook_lengths,
)
from .qpoly import evaluate_at_one


@dataclass(frozen=True)
class SchurExpansion:
    """Coefficients of the n-th power of the first power sum in the Schur basis."""

    n: int
    coefficients: dict  # Partition or GammaPartition -> positive int

    def sum_of_squares(self):
        return sum(m * m for m in self.coefficients.values())


def expand_p1n(n):
    """Expand the n-th power of p_1 over Schur functions by iterated Pieri steps."""
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = {Partition(()): 1}
    for _ in range(n):
        nxt = {}
        for lam, m in coeffs.items():
            for mu in lam.grow():
                nxt[mu] = nxt.get(mu, 0) + m
        coeffs = nxt
    return SchurExpansion(n, coeffs)


def expand_p1n_wreath(N, n):
    """Expand (p_{1,0} + ... + p_{1,N-1})^n over products of component Schur functions.

    Each Pieri step adds one cell to one of the N components.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if n < 1:
        raise ValueError("n must be positive")
    empty = GammaPartition((Partition(()),) * N)
    coeffs = {empty: 1}
    for _ in range(n):
        nxt = {}
        for gp, m in coeffs.items():
            for chi in range(N):
                for mu in gp.components[chi].grow():
                    key = gp.with_component(chi, mu)
                    nxt[key] = nxt.get(key, 0) + m
        coeffs = nxt
    return SchurExpansion(n, coeffs)


def multiplicity_identity_check(N, n, max_N=4, max_n=6):
    """Check the dimension bookkeeping on every N-tuple label of total size n.

    For each label: n! divided by the product of all component hooks must be
    an exact integer, equal to the multinomial times the component tableau
    counts, and equal to the wreath Kostka polynomial at q = 1.
    """
    if N > max_N or n > max_n:
        raise ValueError(f"bounds exceeded: N={N} n={n} beyond ({max_N}, {max_n})")
    for gp in enumerate_gamma_partitions(N, n):
        hook_prod = 1
        for comp in gp.components:
            for h in hook_lengths(comp):
                hook_prod *= h
        quotient, rem = divmod(factorial(n), hook_prod)
        if rem != 0:
            return False
        if quotient != gamma_dimension(gp):
            return False
        if quotient != evaluate_at_one(kostka_wreath(gp)):
            return False
    return True
