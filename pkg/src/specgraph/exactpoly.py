"""Exact polynomial arithmetic and fraction-free linear algebra.

Two polynomial types, both over arbitrary-precision integers:

    IntPoly  univariate in the eigenvalue variable L
    MPoly    sparse multivariate in (L, a', b', c', c), stored as a map
             from exponent vectors to nonzero integer coefficients

plus the exact kernels built on them: Faddeev-LeVerrier characteristic
polynomials of integer matrices, Bareiss fraction-free determinants of
polynomial matrices, exact division, integer root multiplicities and exact
sign evaluation at rationals.  No floats anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from operator import mul

VARS = ("L", "a'", "b'", "c'", "c")
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}
_ZERO_EXP = (0, 0, 0, 0, 0)


class ExactDivisionError(ArithmeticError):
    """A division that was required to be exact left a remainder."""


class IntPoly:
    """Univariate integer polynomial; coeffs[i] is the L^i coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(int(x) for x in c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = IntPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; x may be int, Fraction or float."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_mul_x(self) -> "IntPoly":
        return IntPoly((0,) + self.coeffs) if self.coeffs else self

    def to_mpoly(self) -> "MPoly":
        terms = {}
        for i, c in enumerate(self.coeffs):
            if c:
                terms[(i, 0, 0, 0, 0)] = c
        return MPoly(terms)

    def text(self) -> str:
        return _render_terms(
            [((i, 0, 0, 0, 0), c) for i, c in enumerate(self.coeffs) if c])

    def __repr__(self):
        return f"IntPoly({self.text()})"


def _render_terms(items) -> str:
    """Canonical text: descending L powers, parameters in name order."""
    if not items:
        return "0"
    param_order = sorted(VARS[1:])  # lexicographic: a', b', c, c'

    def sort_key(item):
        exp, _ = item
        params = tuple(-exp[_VAR_INDEX[p]] for p in param_order)
        return (-exp[0],) + params

    parts = []
    for exp, coeff in sorted(items, key=sort_key):
        factors = []
        if exp[0]:
            factors.append("L" if exp[0] == 1 else f"L^{exp[0]}")
        for p in param_order:
            e = exp[_VAR_INDEX[p]]
            if e:
                factors.append(p if e == 1 else f"{p}^{e}")
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)


class MPoly:
    """Sparse polynomial in (L, a', b', c', c) with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    self.terms[tuple(exp)] = int(coeff)

    @classmethod
    def const(cls, value: int) -> "MPoly":
        return cls({_ZERO_EXP: value})

    @classmethod
    def var(cls, name: str) -> "MPoly":
        exp = [0] * len(VARS)
        exp[_VAR_INDEX[name]] = 1
        return cls({tuple(exp): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        p = MPoly()
        p.terms = out
        return p

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return MPoly.const(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MPoly()
            return MPoly({e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2],
                     e1[3] + e2[3], e1[4] + e2[4])
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        p = MPoly()
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def variables(self) -> set[str]:
        used = set()
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used.add(VARS[i])
        return used

    def degree_in(self, name: str) -> int:
        i = _VAR_INDEX[name]
        return max((e[i] for e in self.terms), default=0)

    def coeff_of(self, name: str, power: int) -> "MPoly":
        """Coefficient of name**power, as a polynomial in the other
        variables."""
        i = _VAR_INDEX[name]
        out = {}
        for exp, c in self.terms.items():
            if exp[i] == power:
                e = list(exp)
                e[i] = 0
                out[tuple(e)] = c
        return MPoly(out)

    def constant_term(self) -> int:
        return self.terms.get(_ZERO_EXP, 0)

    def substitute(self, name: str, value) -> "MPoly":
        """Exact substitution of one variable by an int or an MPoly."""
        if isinstance(value, int):
            value = MPoly.const(value)
        i = _VAR_INDEX[name]
        # group by power of the substituted variable, then Horner
        by_power: dict[int, MPoly] = {}
        for exp, c in self.terms.items():
            e = list(exp)
            k = e[i]
            e[i] = 0
            part = by_power.setdefault(k, MPoly())
            part.terms[tuple(e)] = part.terms.get(tuple(e), 0) + c
        acc = MPoly()
        for k in range(max(by_power, default=0), -1, -1):
            acc = acc * value + by_power.get(k, MPoly())
        return acc

    def eval_at(self, assignment: dict):
        """Evaluate at a (possibly partial) assignment.

        Values may be ints or Fractions.  A full assignment returns a
        Fraction (or int); a partial one returns the specialized MPoly,
        which then requires all supplied values to be integers.
        """
        remaining = self.variables() - set(assignment)
        if remaining:
            out = self
            for name, value in assignment.items():
                if not isinstance(value, int):
                    raise TypeError(
                        "partial evaluation supports integer values only")
                out = out.substitute(name, value)
            return out
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = Fraction(c)
            for i, e in enumerate(exp):
                if e:
                    term *= Fraction(assignment[VARS[i]]) ** e
            total += term
        return total

    def divexact(self, den: "MPoly") -> "MPoly":
        """Exact polynomial division; raises ExactDivisionError on any
        remainder."""
        if den.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        den_items = sorted(den.terms.items(), reverse=True)
        den_lead_exp, den_lead_coeff = den_items[0]
        rem = dict(self.terms)
        quot: dict[tuple, int] = {}
        while rem:
            lead_exp = max(rem)
            lead_coeff = rem[lead_exp]
            exp = tuple(a - b for a, b in zip(lead_exp, den_lead_exp))
            if any(e < 0 for e in exp) or lead_coeff % den_lead_coeff:
                raise ExactDivisionError(
                    f"not divisible: leading term {lead_exp} vs {den_lead_exp}")
            c = lead_coeff // den_lead_coeff
            quot[exp] = c
            for dexp, dcoeff in den_items:
                e = (exp[0] + dexp[0], exp[1] + dexp[1], exp[2] + dexp[2],
                     exp[3] + dexp[3], exp[4] + dexp[4])
                s = rem.get(e, 0) - c * dcoeff
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        return MPoly(quot)

    def to_intpoly(self) -> IntPoly:
        if self.variables() - {"L"}:
            raise ValueError("polynomial still has parameters")
        out = [0] * (self.degree_in("L") + 1)
        for exp, c in self.terms.items():
            out[exp[0]] = c
        return IntPoly(out)

    def text(self) -> str:
        return _render_terms(list(self.terms.items()))

    def __repr__(self):
        return f"MPoly({self.text()})"


L = MPoly.var("L")


def poly_div_exact(num: MPoly, den: MPoly) -> MPoly:
    """num / den when the division is exact; ExactDivisionError otherwise.

    A failed division is a meaningful result for the divisibility checks,
    not a crash, so callers are expected to catch it.
    """
    return num.divexact(den)


# ---------------------------------------------------------------------------
# exact characteristic polynomial (Faddeev-LeVerrier over plain ints)

def _matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(map(mul, row, col)) for col in Bt] for row in A]


def charpoly_exact(matrix) -> IntPoly:
    """det(M - L*I) for a square integer matrix, exactly.

    Faddeev-LeVerrier recurrence; every interior division by k is exact for
    integer matrices.  Leading term is (-1)^n L^n.
    """
    A = [[int(x) for x in row] for row in matrix]
    n = len(A)
    if n == 0 or any(len(row) != n for row in A):
        raise ValueError("matrix must be square and nonempty")
    coeffs = [0] * (n + 1)  # det(L*I - M) = L^n + c[n-1] L^{n-1} + ...
    coeffs[n] = 1
    Mk = [row[:] for row in A]
    coeffs[n - 1] = -sum(Mk[i][i] for i in range(n))
    for k in range(2, n + 1):
        shift = coeffs[n - k + 1]
        B = [row[:] for row in Mk]
        for i in range(n):
            B[i][i] += shift
        Mk = _matmul(A, B)
        tr = sum(Mk[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("interior division not exact; bad input?")
        coeffs[n - k] = q
    if n % 2:
        coeffs = [-c for c in coeffs]
    return IntPoly(coeffs)


# ---------------------------------------------------------------------------
# fraction-free determinant of polynomial matrices

def bareiss_det(matrix) -> MPoly:
    """Exact determinant by Bareiss fraction-free elimination.

    Entries may be MPoly or int.  All interior divisions are exact by the
    Bareiss identity; a remainder would mean a broken invariant, so it is a
    hard fault rather than a recoverable error.
    """
    M = [[e if isinstance(e, MPoly) else MPoly.const(e) for e in row]
         for row in matrix]
    n = len(M)
    if n == 0 or any(len(row) != n for row in M):
        raise ValueError("matrix must be square and nonempty")
    if n == 1:
        return M[0][0]
    sign = 1
    prev = MPoly.const(1)
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return MPoly()
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * M[i][j] - M[i][k] * M[k][j]
                try:
                    M[i][j] = num.divexact(prev)
                except ExactDivisionError as exc:
                    raise AssertionError(
                        "Bareiss interior division failed; elimination "
                        "invariant broken") from exc
            M[i][k] = MPoly()
        prev = pivot
    det = M[n - 1][n - 1]
    return det if sign == 1 else -det


# ---------------------------------------------------------------------------
# integer roots and exact signs

def root_multiplicity(p: IntPoly, r: int) -> int:
    """Largest k with (L - r)^k dividing p exactly; 0 if r is not a root."""
    if p.is_zero():
        raise ValueError("zero polynomial has no well-defined multiplicity")
    mult = 0
    cur = p
    while True:
        # synthetic division of cur by (L - r)
        coeffs = cur.coeffs
        if not coeffs:
            break
        quot = [0] * max(len(coeffs) - 1, 0)
        acc = 0
        for i in range(len(coeffs) - 1, 0, -1):
            acc = coeffs[i] + acc * r
            quot[i - 1] = acc
        remainder = coeffs[0] + acc * r
        if remainder != 0:
            break
        mult += 1
        cur = IntPoly(quot)
        if cur.is_zero():
            break
    return mult


def sign_at_rational(p: IntPoly, value) -> int:
    """Exact sign of p at an integer or Fraction, via cleared denominators."""
    q = Fraction(value)
    num, den = q.numerator, q.denominator
    total = 0
    n = p.degree
    if n < 0:
        return 0
    for i, c in enumerate(p.coeffs):
        if c:
            total += c * num ** i * den ** (n - i)
    return (total > 0) - (total < 0)
