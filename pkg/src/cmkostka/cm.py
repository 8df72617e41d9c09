"""Exact rational matrix pairs satisfying the rank-one commutator condition.

Everything here is computed over the rationals with no tolerances: matrix
rank by fraction-free elimination on denominator-cleared integer rows,
characteristic polynomials by the trace recurrence, and the Grassmannian
embedding by explicit congruence solving at each eigenvalue.
"""

from fractions import Fraction
from math import gcd

from .partitions import Partition


class DuplicateEigenvalue(ValueError):
    """Two prescribed eigenvalues coincide; the regular form needs them distinct."""


class DimensionMismatch(ValueError):
    """Matrix shapes do not fit the requested operation."""


class ZeroScalar(ValueError):
    """The torus only acts by nonzero scalars."""


class NotInAnyCell(RuntimeError):
    """No flag-intersection profile exists; indicates a corrupted rank computation."""


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalMatrix:
    """Dense matrix of exact rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(_frac(x) for x in row) for row in entries)
        if not entries:
            raise ValueError("matrix needs at least one row")
        cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @staticmethod
    def identity(n):
        return RationalMatrix(
            [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def diagonal(values):
        values = [_frac(v) for v in values]
        n = len(values)
        return RationalMatrix(
            [[values[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        )

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"RationalMatrix({[list(map(str, row)) for row in self.entries]})"

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(f"{self.rows}x{self.cols} + {other.rows}x{other.cols}")
        return RationalMatrix(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(f"{self.rows}x{self.cols} - {other.rows}x{other.cols}")
        return RationalMatrix(
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = [Fraction(0)] * other.cols
            for k in range(self.cols):
                a = self.entries[i][k]
                if a == 0:
                    continue
                other_row = other.entries[k]
                for j in range(other.cols):
                    if other_row[j]:
                        row[j] += a * other_row[j]
            out.append(row)
        return RationalMatrix(out)

    def scaled(self, c):
        c = _frac(c)
        return RationalMatrix([[c * x for x in row] for row in self.entries])

    def transpose(self):
        return RationalMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def trace(self):
        if self.rows != self.cols:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def _integer_rows(self):
        # Clear each row's denominators; scaling rows never changes the rank.
        out = []
        for row in self.entries:
            denom_lcm = 1
            for x in row:
                denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
            out.append([int(x * denom_lcm) for x in row])
        return out

    def rank(self):
        """Exact rank by fraction-free (Bareiss) elimination with partial pivoting."""
        m = self._integer_rows()
        rows, cols = self.rows, self.cols
        r = 0
        prev = 1
        for c in range(cols):
            if r == rows:
                break
            pivot = max(range(r, rows), key=lambda i: abs(m[i][c]))
            if m[pivot][c] == 0:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            for i in range(r + 1, rows):
                for j in range(c + 1, cols):
                    m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
                m[i][c] = 0
            prev = m[r][c]
            r += 1
        return r

    def rref(self):
        """Reduced row echelon form and the list of pivot columns."""
        m = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            pivot = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return RationalMatrix(m), pivots

    def nullspace(self):
        """Basis of the kernel, one tuple per free column."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            vec = [Fraction(0)] * self.cols
            vec[free] = Fraction(1)
            for r, c in enumerate(pivots):
                vec[c] = -reduced.entries[r][free]
            basis.append(tuple(vec))
        return basis

    def charpoly(self):
        """Monic characteristic polynomial det(zI - A), coefficients low to high.

        Uses the trace recurrence M_k = A M_{k-1} + c_{n-k+1} I with
        c_{n-k} = -tr(A M_k)/k, which is exact over the rationals.
        """
        if self.rows != self.cols:
            raise DimensionMismatch("characteristic polynomial of a non-square matrix")
        n = self.rows
        ident = RationalMatrix.identity(n)
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        m = ident
        for k in range(1, n + 1):
            am = self @ m
            c = -am.trace() / k
            coeffs[n - k] = c
            if k < n:
                m = am + ident.scaled(c)
        return tuple(coeffs)


class CMPointRegular:
    """Distinct eigenvalues y_1..y_n and diagonal parameters alpha_1..alpha_n."""

    __slots__ = ("y", "alpha")

    def __init__(self, y, alpha):
        y = tuple(_frac(v) for v in y)
        alpha = tuple(_frac(v) for v in alpha)
        if len(y) != len(alpha):
            raise ValueError(f"{len(y)} eigenvalues but {len(alpha)} parameters")
        if not y:
            raise ValueError("need at least one point")
        if len(set(y)) != len(y):
            raise DuplicateEigenvalue(f"eigenvalues must be pairwise distinct: {[str(v) for v in y]}")
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "alpha", alpha)

    def __setattr__(self, name, value):
        raise AttributeError("CMPointRegular is immutable")

    @property
    def n(self):
        return len(self.y)

    def concatenated(self, other):
        """Join with another point; the supports must stay disjoint."""
        return CMPointRegular(self.y + other.y, self.alpha + other.alpha)


class EmbeddedPoint:
    """A codimension-n ideal (monic, as low-to-high coefficients) together with
    an n-dimensional subspace of the 2n-dimensional quotient, columns in the
    monomial basis 1, z, ..., z^(2n-1)."""

    __slots__ = ("ideal", "subspace")

    def __init__(self, ideal, subspace):
        ideal = tuple(_frac(c) for c in ideal)
        if not ideal or ideal[-1] != 1:
            raise ValueError("ideal generator must be monic")
        n = len(ideal) - 1
        if subspace.rows != 2 * n or subspace.cols != n:
            raise ValueError(f"subspace must be {2 * n}x{n}, got {subspace.rows}x{subspace.cols}")
        if subspace.rank() != n:
            raise ValueError("subspace columns must be linearly independent")
        object.__setattr__(self, "ideal", ideal)
        object.__setattr__(self, "subspace", subspace)

    def __setattr__(self, name, value):
        raise AttributeError("EmbeddedPoint is immutable")

    @property
    def n(self):
        return len(self.ideal) - 1


def wilson_representative(point):
    """Normal form (X, Y) of a regular point: Y diagonal, X with reciprocal
    eigenvalue differences off the diagonal and the alphas on it."""
    y, alpha = point.y, point.alpha
    n = point.n
    x_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(alpha[i])
            else:
                row.append(1 / (y[i] - y[j]))
        x_rows.append(row)
    return RationalMatrix(x_rows), RationalMatrix.diagonal(y)


def commutator_plus_identity(x, y):
    """YX - XY + Id, the matrix whose rank-one condition cuts out the space.

    The orientation matters: with the normal form (x_ij = 1/(y_i - y_j),
    Y diagonal) this is the all-ones matrix, visibly of rank one, while the
    opposite order has full rank as soon as n is at least 3.
    """
    if x.rows != x.cols or y.rows != y.cols or x.rows != y.rows:
        raise DimensionMismatch(f"need equal square matrices, got {x.rows}x{x.cols} and {y.rows}x{y.cols}")
    return (y @ x) - (x @ y) + RationalMatrix.identity(x.rows)


def verify_cm(x, y):
    """Check that YX - XY + Id has rank exactly one.

    Returns (ok, m, witness): m is the commutator-plus-identity matrix and
    witness is a (column, row) pair with m = column * row when ok.
    """
    m = commutator_plus_identity(x, y)
    if m.rank() != 1:
        return False, m, None
    pivot_row = next(i for i in range(m.rows) if any(m.entries[i]))
    row = m.entries[pivot_row]
    pivot_col = next(j for j in range(m.cols) if row[j] != 0)
    column = tuple(m.entries[i][pivot_col] / row[pivot_col] for i in range(m.rows))
    return True, m, (column, row)


def cstar_act(c, x, y):
    """Scale the pair: X by 1/c and Y by c; c must be nonzero."""
    c = _frac(c)
    if c == 0:
        raise ZeroScalar("torus scalars must be nonzero")
    return x.scaled(1 / c), y.scaled(c)


def involution(x, y):
    """Swap the pair through transposition: (X, Y) -> (Y^t, X^t)."""
    if x.rows != x.cols or y.rows != y.cols or x.rows != y.rows:
        raise DimensionMismatch(f"need equal square matrices, got {x.rows}x{x.cols} and {y.rows}x{y.cols}")
    return y.transpose(), x.transpose()


def projections(x, y):
    """Characteristic polynomials of X and Y, each as low-to-high coefficients."""
    return x.charpoly(), y.charpoly()


# -- dense univariate polynomials over the rationals, low-to-high coefficient lists


def poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def poly_from_roots(roots):
    """Monic polynomial with the given roots, low-to-high coefficients."""
    out = [Fraction(1)]
    for r in roots:
        out = poly_mul(out, [-_frac(r), Fraction(1)])
    return tuple(out)


def poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_eval_derivative(coeffs, x):
    acc = Fraction(0)
    for k in range(len(coeffs) - 1, 0, -1):
        acc = acc * x + k * coeffs[k]
    return acc


def wilson_embed(point):
    """Embed a regular point into the relative Grassmannian.

    The ideal is the product of (z - y_i).  The i-th basis vector is the
    unique polynomial of degree < 2n congruent to 1 - alpha_i (z - y_i)
    modulo (z - y_i)^2 and to zero modulo (z - y_j)^2 for j != i; it is
    built directly as P_i * g_i where P_i is the product of the other
    squared factors and g_i is the inverse-linear correction at y_i.
    """
    y, alpha = point.y, point.alpha
    n = point.n
    columns = []
    for i in range(n):
        p_i = [Fraction(1)]
        for j in range(n):
            if j != i:
                factor = [-y[j], Fraction(1)]
                p_i = poly_mul(p_i, poly_mul(factor, factor))
        a = poly_eval(p_i, y[i])  # product of squared differences, nonzero
        b = poly_eval_derivative(p_i, y[i])
        u = 1 / a
        v = -(alpha[i] / a + b / (a * a))
        # g_i = u + v (z - y_i); then P_i g_i = 1 - alpha_i (z - y_i) mod (z - y_i)^2
        g_i = [u - v * y[i], v]
        w = poly_mul(p_i, g_i)
        w += [Fraction(0)] * (2 * n - len(w))
        columns.append(w)
    subspace = RationalMatrix([[columns[j][r] for j in range(n)] for r in range(2 * n)])
    return EmbeddedPoint(poly_from_roots(y), subspace)


def component_line(point, y_i):
    """Project the subspace into the square of the maximal ideal quotient at y_i.

    Returns the projected line as a normalized pair (value, derivative) in the
    basis 1, (z - y_i); y_i must be a root of the ideal.
    """
    if poly_eval(point.ideal, _frac(y_i)) != 0:
        raise ValueError(f"{y_i} is not a root of the ideal")
    images = []
    for j in range(point.subspace.cols):
        coeffs = [point.subspace.entries[r][j] for r in range(point.subspace.rows)]
        val = poly_eval(coeffs, _frac(y_i))
        der = poly_eval_derivative(coeffs, _frac(y_i))
        if val != 0 or der != 0:
            images.append((val, der))
    if not images:
        raise ValueError(f"subspace projects to zero at {y_i}")
    lead_val, lead_der = images[0]
    scale = lead_val if lead_val != 0 else lead_der
    line = (lead_val / scale, lead_der / scale)
    for val, der in images[1:]:
        s = val if val != 0 else der
        if (val / s, der / s) != line:
            raise ValueError(f"projection at {y_i} is not a line")
    return line


def monomial_subspace(exponents, ambient):
    """Coordinate subspace spanned by the given monomial exponents, as a basis matrix."""
    exps = sorted(exponents, reverse=True)
    if any(e < 0 or e >= ambient for e in exps):
        raise ValueError(f"exponents {exps} outside ambient degree {ambient}")
    return RationalMatrix(
        [[Fraction(1) if e == r else Fraction(0) for e in exps] for r in range(ambient)]
    )


def schubert_profile(subspace):
    """Flag-intersection profile of a half-dimensional subspace.

    The flag step j is spanned by the top j monomials; the profile entry l_i
    is j_i - i where j_i is the first step meeting the subspace in dimension
    i.  Returned with zero entries dropped, as a standard Partition.
    """
    if subspace.rows != 2 * subspace.cols:
        raise DimensionMismatch(
            f"need an n-dimensional subspace of a 2n-dimensional space, got {subspace.rows}x{subspace.cols}"
        )
    n = subspace.cols
    ambient = subspace.rows
    if subspace.rank() != n:
        raise NotInAnyCell("basis columns are dependent")
    jumps = []
    prev = 0
    for j in range(1, ambient + 1):
        # dim(W meet F_j) = n + j - rank([W | F_j])
        flag_cols = [
            [Fraction(1) if r == ambient - t else Fraction(0) for t in range(1, j + 1)]
            for r in range(ambient)
        ]
        stacked = RationalMatrix(
            [list(subspace.entries[r]) + flag_cols[r] for r in range(ambient)]
        )
        d = n + j - stacked.rank()
        if d < prev or d > prev + 1:
            raise NotInAnyCell(f"intersection dimensions must step by 0 or 1, got {prev} -> {d}")
        if d == prev + 1:
            jumps.append(j)
        prev = d
    if len(jumps) != n:
        raise NotInAnyCell(f"expected {n} jumps, found {len(jumps)}")
    increasing = [jumps[i] - (i + 1) for i in range(n)]
    return Partition(tuple(p for p in reversed(increasing) if p > 0))
