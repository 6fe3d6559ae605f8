"""Exact rational and cyclotomic arithmetic, plus dense exact linear algebra.

Rationals are :class:`fractions.Fraction`.  Elements of Q(xi_r) are stored as
coefficient vectors reduced modulo the r-th cyclotomic polynomial, which gives
a canonical form: two values are equal iff their coefficient tuples are equal.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

__all__ = [
    "Cyclotomic",
    "UniPoly",
    "NoSolution",
    "BudgetExceeded",
    "cyclotomic_polynomial",
    "totient",
    "root_power",
    "conjugate",
    "as_cyclotomic",
    "exact_solve",
    "exact_rank",
    "matrix_inverse",
    "mat_mul",
    "format_rational",
    "parse_rational",
    "cyclotomic_to_json",
    "cyclotomic_from_json",
]

Scalar = Union[int, Fraction, "Cyclotomic"]


class NoSolution(ValueError):
    """Raised by :func:`exact_solve` when the linear system is inconsistent."""


class BudgetExceeded(RuntimeError):
    """A computation would exceed its configured size budget."""


def totient(r: int) -> int:
    return sum(1 for i in range(1, r + 1) if gcd(i, r) == 1)


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic; coefficient lists are ascending in degree
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    rem = num[:dd] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def _phi_coeffs(r: int) -> tuple[int, ...]:
    """Integer coefficients (ascending) of the r-th cyclotomic polynomial."""
    if r < 1:
        raise ValueError("r must be positive")
    num = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            num, rem = _poly_divmod_int(num, list(_phi_coeffs(d)))
            assert not any(rem)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(r: int) -> tuple[tuple[int, ...], ...]:
    """Row e holds x^e mod Phi_r for e in 0..r-1, as integer vectors of length phi(r)."""
    phi = _phi_coeffs(r)
    deg = len(phi) - 1
    rows = []
    for e in range(r):
        vec = [0] * max(e + 1, deg)
        vec[e] = 1
        _, rem = _poly_divmod_int(vec, list(phi))
        rem = list(rem) + [0] * (deg - len(rem))
        rows.append(tuple(rem[:deg]))
    return tuple(rows)


def _reduce_cyclic(r: int, cyc: Sequence) -> tuple:
    """Reduce a length-r vector (coefficients of x^0..x^{r-1} mod x^r-1) modulo Phi_r."""
    table = _power_table(r)
    deg = len(table[0])
    if r == deg:
        return tuple(Fraction(c) for c in cyc)
    out = [Fraction(0)] * deg
    for e, c in enumerate(cyc):
        if c:
            for i, t in enumerate(table[e]):
                if t:
                    out[i] += c * t
    return tuple(out)


class Cyclotomic:
    """An element of the cyclotomic field Q(xi_r) in canonical form.

    ``Cyclotomic(r, coeffs)`` accepts a coefficient list of any length
    (the value ``sum coeffs[i] * xi**i``) and reduces it.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Iterable = (0,)):
        if order < 1:
            raise ValueError("order must be positive")
        cyc = [Fraction(0)] * order
        for i, c in enumerate(coeffs):
            if c:
                cyc[i % order] += Fraction(c)
        self.order = order
        self.coeffs = _reduce_cyclic(order, cyc)
        self._hash = None

    @classmethod
    def _raw(cls, order: int, coeffs: tuple) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, order: int, value) -> "Cyclotomic":
        deg = len(_phi_coeffs(order)) - 1
        return cls._raw(order, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    # -- predicates ---------------------------------------------------------
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    # -- coercion -----------------------------------------------------------
    def _lift(self, order: int) -> "Cyclotomic":
        if order == self.order:
            return self
        if self.is_rational():
            return Cyclotomic.rational(order, self.coeffs[0])
        if order % self.order == 0:
            step = order // self.order
            cyc = [Fraction(0)] * order
            for i, c in enumerate(self.coeffs):
                cyc[(i * step) % order] += c
            return Cyclotomic._raw(order, _reduce_cyclic(order, cyc))
        raise ValueError(f"cannot combine orders {self.order} and {order}")

    def _coerce(self, other) -> tuple["Cyclotomic", "Cyclotomic"] | None:
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self, other
            order = max(self.order, other.order)
            if self.order == 1 or other.order == 1 or order % min(self.order, other.order) == 0:
                return self._lift(order), other._lift(order)
            raise ValueError(f"cannot combine orders {self.order} and {other.order}")
        if isinstance(other, (int, Fraction)):
            return self, Cyclotomic.rational(self.order, other)
        return None

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic._raw(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic._raw(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.order, tuple(x * other for x in self.coeffs))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if b.is_rational():
            s = b.coeffs[0]
            return Cyclotomic._raw(a.order, tuple(x * s for x in a.coeffs))
        if a.is_rational():
            s = a.coeffs[0]
            return Cyclotomic._raw(a.order, tuple(s * x for x in b.coeffs))
        r = a.order
        cyc = [Fraction(0)] * r
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        cyc[(i + j) % r] += x * y
        return Cyclotomic._raw(r, _reduce_cyclic(r, cyc))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclotomic.rational(self.order, 1 / self.coeffs[0])
        # solve (multiplication-by-self matrix) * v = e_0
        deg = len(self.coeffs)
        basis = [Cyclotomic._raw(self.order, tuple(Fraction(int(i == j)) for i in range(deg)))
                 for j in range(deg)]
        cols = [(self * b).coeffs for b in basis]
        mat = [[cols[j][i] for j in range(deg)] for i in range(deg)]
        rhs = [Fraction(int(i == 0)) for i in range(deg)]
        sol = exact_solve(mat, rhs)
        return Cyclotomic._raw(self.order, tuple(sol))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic._raw(self.order, tuple(x / other for x in self.coeffs))
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic.rational(self.order, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            try:
                a, b = self._coerce(other)
            except ValueError:
                return False
            return a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.order, self.coeffs))
        return self._hash

    def conjugate(self) -> "Cyclotomic":
        return conjugate(self)

    def __repr__(self):
        return f"Cyclotomic({self.order}, {[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_rational():
            return format_rational(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("xi" if i == 1 else f"xi^{i}")
            if not mono:
                terms.append(format_rational(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{format_rational(c)}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def as_cyclotomic(r: int, value) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value._lift(r) if value.order != r else value
    return Cyclotomic.rational(r, value)


def root_power(r: int, e: int) -> Cyclotomic:
    """Canonical form of xi_r ** e."""
    return Cyclotomic._raw(r, _power_row(r, e % r))


@lru_cache(maxsize=None)
def _power_row(r: int, e: int) -> tuple:
    return tuple(Fraction(t) for t in _power_table(r)[e])


def conjugate(z) -> Cyclotomic:
    """Complex conjugate: the field automorphism xi -> xi^(r-1)."""
    if not isinstance(z, Cyclotomic):
        return z
    if z.is_rational():
        return z
    r = z.order
    cyc = [Fraction(0)] * r
    for i, c in enumerate(z.coeffs):
        cyc[(-i) % r] += c
    return Cyclotomic._raw(r, _reduce_cyclic(r, cyc))


class UniPoly:
    """Univariate polynomial with cyclotomic coefficients, ascending degree."""

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Iterable = (), var: str = "q", order: int = 1):
        cs = [c if isinstance(c, Cyclotomic) else Cyclotomic.rational(order, c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other], self.var)
        n = max(len(self.coeffs), len(other.coeffs))
        zero = Cyclotomic.rational(1, 0)
        a = self.coeffs + (zero,) * (n - len(self.coeffs))
        b = other.coeffs + (zero,) * (n - len(other.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-other if isinstance(other, UniPoly) else -as_cyclotomic(1, other))

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs], self.var)
        if not self.coeffs or not other.coeffs:
            return UniPoly([], self.var)
        out = [Cyclotomic.rational(1, 0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __call__(self, value):
        acc = Cyclotomic.rational(1, 0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]}, var={self.var!r})"


def cyclotomic_polynomial(r: int) -> UniPoly:
    """Phi_r as a polynomial in x with integer coefficients."""
    return UniPoly(_phi_coeffs(r), var="x")


# -- dense linear algebra over Q or Q(xi_r) -------------------------------------

def _is_zero(x) -> bool:
    return not x


def _row_reduce(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    pr = 0
    for col in range(ncols):
        if pr == m:
            break
        piv = next((i for i in range(pr, m) if not _is_zero(rows[i][col])), None)
        if piv is None:
            continue
        rows[pr], rows[piv] = rows[piv], rows[pr]
        inv = 1 / rows[pr][col] if not isinstance(rows[pr][col], Cyclotomic) else rows[pr][col].inverse()
        rows[pr] = [x * inv for x in rows[pr]]
        for i in range(m):
            if i != pr and not _is_zero(rows[i][col]):
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[pr])]
        pivots.append(col)
        pr += 1
    return rows, pivots


def exact_rank(A: Sequence[Sequence]) -> int:
    if not A or not A[0]:
        return 0
    rows = [[_norm(x) for x in row] for row in A]
    _, pivots = _row_reduce(rows)
    return len(pivots)


def _norm(x):
    return Fraction(x) if isinstance(x, int) else x


def exact_solve(A: Sequence[Sequence], b: Sequence) -> list:
    """Solve ``A x = b`` exactly; free variables are set to zero.

    Raises :class:`NoSolution` if the system is inconsistent.  The result is
    checked by substitution before it is returned.
    """
    m = len(A)
    if len(b) != m:
        raise ValueError("right-hand side length does not match row count")
    if m == 0:
        return []
    ncols = len(A[0])
    rows = [[_norm(x) for x in A[i]] + [_norm(b[i])] for i in range(m)]
    rows, pivots = _row_reduce(rows)
    if ncols in pivots:
        raise NoSolution("inconsistent system")
    zero = _zero_like(b[0] if b else 0)
    x = [zero] * ncols
    for i, col in enumerate(pivots):
        x[col] = rows[i][ncols]
    for i in range(m):
        acc = zero
        for j in range(ncols):
            if not _is_zero(A[i][j]) and not _is_zero(x[j]):
                acc = acc + A[i][j] * x[j]
        if acc != b[i]:
            raise AssertionError("exact_solve verification failed")
    return x


def _zero_like(x):
    if isinstance(x, Cyclotomic):
        return Cyclotomic.rational(x.order, 0)
    return Fraction(0)


def matrix_inverse(A: Sequence[Sequence]) -> list[list]:
    n = len(A)
    one, zero = Fraction(1), Fraction(0)
    rows = [[_norm(x) for x in A[i]] + [one if i == j else zero for j in range(n)] for i in range(n)]
    rows, pivots = _row_reduce(rows)
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        raise NoSolution("matrix is singular")
    return [row[n:] for row in rows]


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        new = []
        for j in range(cols):
            acc = Fraction(0)
            for t in range(inner):
                if not _is_zero(row[t]) and not _is_zero(B[t][j]):
                    acc = acc + row[t] * B[t][j]
            new.append(acc)
        out.append(new)
    return out


# -- serialization ----------------------------------------------------------------

def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def cyclotomic_to_json(z) -> list[str]:
    if not isinstance(z, Cyclotomic):
        return [format_rational(z)]
    return [format_rational(c) for c in z.coeffs]


def cyclotomic_from_json(r: int, data: Sequence[str]) -> Cyclotomic:
    return Cyclotomic(r, [parse_rational(s) for s in data])
