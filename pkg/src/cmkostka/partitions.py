"""Integer partitions, Young diagrams, hooks, and tableau counting.

Partitions are stored with parts in weakly decreasing order.  The
torus-weight formulas elsewhere in this package want the same data as a
weakly increasing sequence padded with zeros to a fixed length; use
``Partition.padded_increasing`` for that view.
"""

from collections import namedtuple
from functools import lru_cache
from math import factorial, prod


class BoundExceeded(ValueError):
    """Raised when an enumeration is asked to run past its configured size cap."""


class PartitionParseError(ValueError):
    """Bad partition text; carries the character position of the offending token."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


Cell = namedtuple("Cell", ["row", "col"])


class Partition:
    """A weakly decreasing sequence of positive integers.

    Immutable and hashable; the empty sequence is the unique partition of 0.
    """

    __slots__ = ("parts", "size")

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {p} in {parts}")
            if i > 0 and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "size", sum(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return f"Partition({self.parts})"

    def __str__(self):
        return ",".join(str(p) for p in self.parts) if self.parts else "-"

    def cells(self):
        """Iterate the diagram's cells as Cell(row, col), 0-based, English reading order."""
        for r, p in enumerate(self.parts):
            for c in range(p):
                yield Cell(r, c)

    def conjugate(self):
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for p in self.parts:
            for c in range(p):
                cols[c] += 1
        return Partition(cols)

    def hook(self, row, col):
        """Hook length of the cell: arm + leg + 1."""
        if row >= len(self.parts) or col >= self.parts[row]:
            raise ValueError(f"cell ({row},{col}) outside diagram {self.parts}")
        arm = self.parts[row] - col - 1
        leg = sum(1 for r in range(row + 1, len(self.parts)) if self.parts[r] > col)
        return arm + leg + 1

    def weighted_size(self):
        """Sum of (row index) over all cells, rows counted from 0; the classical n(lambda)."""
        return sum(r * p for r, p in enumerate(self.parts))

    def padded_increasing(self, length):
        """Parts in weakly increasing order, zero-padded on the left to the given length."""
        if length < len(self.parts):
            raise ValueError(f"cannot pad {self.parts} to length {length}")
        return (0,) * (length - len(self.parts)) + tuple(reversed(self.parts))

    def grow(self):
        """Partitions obtained by adding one cell (successors in Young's lattice)."""
        out = []
        for r in range(len(self.parts)):
            if r == 0 or self.parts[r - 1] > self.parts[r]:
                out.append(Partition(self.parts[:r] + (self.parts[r] + 1,) + self.parts[r + 1:]))
        out.append(Partition(self.parts + (1,)))
        return out

    def shrink(self):
        """Partitions obtained by removing one corner cell."""
        out = []
        for r in range(len(self.parts)):
            if r == len(self.parts) - 1 or self.parts[r] > self.parts[r + 1]:
                if self.parts[r] == 1:
                    out.append(Partition(self.parts[:r] + self.parts[r + 1:]))
                else:
                    out.append(Partition(self.parts[:r] + (self.parts[r] - 1,) + self.parts[r + 1:]))
        return out


class GammaPartition:
    """An N-tuple of partitions, indexed by the characters 0..N-1 of a cyclic group."""

    __slots__ = ("components",)

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise ValueError("need at least one component")
        for c in components:
            if not isinstance(c, Partition):
                raise TypeError(f"components must be Partition, got {type(c).__name__}")
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("GammaPartition is immutable")

    @property
    def N(self):
        return len(self.components)

    @property
    def size(self):
        return sum(c.size for c in self.components)

    def __eq__(self, other):
        return isinstance(other, GammaPartition) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"GammaPartition({self.components!r})"

    def __str__(self):
        return ";".join(str(c) for c in self.components)

    def with_component(self, index, part):
        return GammaPartition(self.components[:index] + (part,) + self.components[index + 1:])

    def permuted(self, perm):
        """Reindex the component slots by perm (slot i of the result is component perm[i])."""
        return GammaPartition(tuple(self.components[perm[i]] for i in range(len(perm))))


def _partition_tuples(n):
    # Reverse-lexicographic order: (n) first, (1,...,1) last.
    if n == 0:
        yield ()
        return
    cur = [n]
    while True:
        yield tuple(cur)
        rem = 0
        while cur and cur[-1] == 1:
            rem += 1
            cur.pop()
        if not cur:
            return
        cur[-1] -= 1
        rem += 1
        cap = cur[-1]
        while rem > 0:
            t = min(cap, rem)
            cur.append(t)
            rem -= t


@lru_cache(maxsize=None)
def _partitions_of(n):
    return tuple(Partition(t) for t in _partition_tuples(n))


def enumerate_partitions(n):
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions_of(n))


def hook_lengths(lam):
    """Multiset of hook lengths of the diagram, as a decreasing tuple."""
    return tuple(sorted((lam.hook(r, c) for r, c in lam.cells()), reverse=True))


def syt_count(lam):
    """Number of standard Young tableaux of the shape, by the hook length formula."""
    hooks = hook_lengths(lam)
    return factorial(lam.size) // prod(hooks)


@lru_cache(maxsize=None)
def _corner_removal_count(parts):
    if not parts:
        return 1
    return sum(_corner_removal_count(mu.parts) for mu in Partition(parts).shrink())


def syt_enumerate(lam, max_size=10):
    """Count standard tableaux by recursive corner removal.

    Independent of the hook formula; refuses shapes larger than max_size.
    """
    if lam.size > max_size:
        raise BoundExceeded(f"shape of size {lam.size} exceeds enumeration bound {max_size}")
    return _corner_removal_count(lam.parts)


def standard_tableaux(lam):
    """Yield each standard tableau of the shape as a tuple rows, rows[v] = row of value v+1."""
    parts = lam.parts
    n = lam.size
    fill = [0] * len(parts)
    rows = []

    def rec(v):
        if v == n:
            yield tuple(rows)
            return
        for r in range(len(parts)):
            if fill[r] < parts[r] and (r == 0 or fill[r - 1] > fill[r]):
                fill[r] += 1
                rows.append(r)
                yield from rec(v + 1)
                fill[r] -= 1
                rows.pop()

    yield from rec(0)


def major_index(rows):
    """maj of a standard tableau given as a row sequence: sum of descents.

    Value i is a descent when i+1 sits in a strictly lower row than i.
    """
    return sum(i + 1 for i in range(len(rows) - 1) if rows[i + 1] > rows[i])


def multinomial(n, sizes):
    """n! / prod(sizes!), exact; sizes must sum to n."""
    if sum(sizes) != n:
        raise ValueError(f"sizes {sizes} do not sum to {n}")
    return factorial(n) // prod(factorial(s) for s in sizes)


def gamma_dimension(gp):
    """Dimension attached to a GammaPartition: multinomial(n; sizes) times component SYT counts."""
    sizes = [c.size for c in gp.components]
    return multinomial(gp.size, sizes) * prod(syt_count(c) for c in gp.components)


def _compositions(n, slots):
    # First slot runs from n down to 0; deterministic order for golden tests.
    if slots == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, slots - 1):
            yield (first,) + rest


def enumerate_gamma_partitions(N, n):
    """All N-tuples of partitions with total size n, each exactly once."""
    if N < 1:
        raise ValueError("N must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for comp in _compositions(n, N):
        choices = [_partitions_of(c) for c in comp]
        stack = [()]
        for options in choices:
            stack = [pre + (opt,) for pre in stack for opt in options]
        out.extend(GammaPartition(t) for t in stack)
    return out


def parse_partition(text):
    """Parse comma-separated decreasing parts, e.g. "3,1,1"; "-" or "" is the empty partition."""
    stripped = text.strip()
    if stripped in ("", "-"):
        return Partition(())
    parts = []
    pos = 0
    for token in stripped.split(","):
        try:
            value = int(token)
        except ValueError:
            raise PartitionParseError(f"expected an integer part, got {token!r}", pos) from None
        if value < 1:
            raise PartitionParseError(f"parts must be positive, got {value}", pos)
        if parts and parts[-1] < value:
            raise PartitionParseError(f"parts must be weakly decreasing, got {value} after {parts[-1]}", pos)
        parts.append(value)
        pos += len(token) + 1
    return Partition(parts)


def parse_gamma_partition(text):
    """Parse semicolon-separated components, empty component written "-", e.g. "2,1;-;1"."""
    components = []
    pos = 0
    for chunk in text.split(";"):
        try:
            components.append(parse_partition(chunk))
        except PartitionParseError as err:
            raise PartitionParseError(str(err).rsplit(" (at", 1)[0], pos + err.position) from None
        pos += len(chunk) + 1
    return GammaPartition(components)
