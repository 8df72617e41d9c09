"""Exact Laurent polynomials in one variable q with integer coefficients.

Coefficients are Python ints (arbitrary precision), stored sparsely as an
exponent -> coefficient map with no zero entries.  Division is exact or it
raises; there is no floating point anywhere.
"""

from fractions import Fraction


class NonExactDivision(ArithmeticError):
    """Division left a nonzero remainder or a non-integer quotient.

    remainder holds the offending remainder as an exponent -> Fraction map
    (empty when the failure is a fractional quotient).
    """

    def __init__(self, message, remainder):
        super().__init__(message)
        self.remainder = dict(remainder)


class LaurentPoly:
    """Sparse Laurent polynomial over the integers, immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for exp, c in coeffs.items():
                c = int(c)
                if c != 0:
                    clean[int(exp)] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @staticmethod
    def zero():
        return LaurentPoly()

    @staticmethod
    def one():
        return LaurentPoly({0: 1})

    @staticmethod
    def term(coeff, exp):
        return LaurentPoly({exp: coeff})

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for exp, c in other.coeffs.items():
            s = out.get(exp, 0) + c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(out)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def min_exponent(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self.coeffs)

    def max_exponent(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self.coeffs)

    def shifted(self, k):
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def truncated(self, order):
        """Drop all terms with exponent > order."""
        return LaurentPoly({e: c for e, c in self.coeffs.items() if e <= order})

    def is_palindromic(self):
        """Fixed by q -> 1/q."""
        return self == substitute_inverse(self)

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for exp in sorted(self.coeffs):
            c = self.coeffs[exp]
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            elif exp == 1:
                body = "q" if mag == 1 else f"{mag}*q"
            else:
                body = f"q^{exp}" if mag == 1 else f"{mag}*q^{exp}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"LaurentPoly({self.coeffs!r})"

    def to_json_dict(self):
        """Exponents and coefficients as decimal strings, ascending exponent order."""
        return {str(e): str(self.coeffs[e]) for e in sorted(self.coeffs)}

    @staticmethod
    def from_json_dict(data):
        return LaurentPoly({int(e): int(c) for e, c in data.items()})


ONE_MINUS = {}  # small cache of 1 - q^k factors


def one_minus_q(k):
    poly = ONE_MINUS.get(k)
    if poly is None:
        poly = ONE_MINUS[k] = LaurentPoly({0: 1, k: -1})
    return poly


def qfactorial_product(n):
    """(1-q)(1-q^2)...(1-q^n); the empty product for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = LaurentPoly.one()
    for i in range(1, n + 1):
        result = result * one_minus_q(i)
    return result


def exact_divide(a, b):
    """The Laurent polynomial c with a = b * c, or raise NonExactDivision.

    Both operands are normalized by their minimal exponents, the division is
    done by classical long division over the rationals, and the exponent
    offset is restored at the end.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero()
    shift = a.min_exponent() - b.min_exponent()
    num = {e - a.min_exponent(): Fraction(c) for e, c in a.coeffs.items()}
    den = {e - b.min_exponent(): Fraction(c) for e, c in b.coeffs.items()}
    deg_den = max(den)
    lead_den = den[deg_den]
    quotient = {}
    while num:
        deg_num = max(num)
        if deg_num < deg_den:
            break
        factor = num[deg_num] / lead_den
        pos = deg_num - deg_den
        quotient[pos] = factor
        for e, c in den.items():
            tgt = e + pos
            s = num.get(tgt, Fraction(0)) - factor * c
            if s == 0:
                num.pop(tgt, None)
            else:
                num[tgt] = s
    if num:
        raise NonExactDivision(
            f"division left remainder with exponents {sorted(num)}", num
        )
    if any(c.denominator != 1 for c in quotient.values()):
        raise NonExactDivision("quotient has non-integer coefficients", {})
    return LaurentPoly({e + shift: int(c) for e, c in quotient.items()})


def substitute_inverse(a):
    """Replace q by 1/q: negate every exponent."""
    return LaurentPoly({-e: c for e, c in a.coeffs.items()})


def evaluate_at_one(a):
    """Value at q = 1: the sum of all coefficients."""
    return sum(a.coeffs.values())


def qmultinomial(n, sizes):
    """Gaussian multinomial coefficient as a genuine polynomial.

    Equals qfactorial_product(n) divided by the product of component
    qfactorial_products; sizes must sum to n.
    """
    if sum(sizes) != n:
        raise ValueError(f"sizes {sizes} do not sum to {n}")
    den = LaurentPoly.one()
    for s in sizes:
        den = den * qfactorial_product(s)
    return exact_divide(qfactorial_product(n), den)


def geometric_product_series(exponents, order):
    """Truncation of prod over e of 1/(1 - q^e) through q^order.

    Every e must be positive; the result is an ordinary polynomial holding the
    coefficients of the formal power series up to the given order.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    series = {0: 1}
    for e in exponents:
        if e < 1:
            raise ValueError(f"geometric factors need positive exponents, got {e}")
        # multiply by 1/(1 - q^e): out[k] = sum of series[k - j*e]
        out = {}
        for k in range(order + 1):
            s = series.get(k, 0)
            if k >= e:
                s += out.get(k - e, 0)
            if s:
                out[k] = s
        series = out
    return LaurentPoly(series)
