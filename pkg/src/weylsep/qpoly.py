"""Exact polynomial arithmetic over the integers in one variable q.

Provides q-integers, q-factorials, q-multinomial coefficients, exact
division, palindromicity tests, and a truncated-congruence check used by
the verification sweeps.  Coefficients are arbitrary-precision Python
integers; there is no floating point anywhere.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import DomainError, NotDivisibleError


class QPolynomial:
    """Integer polynomial in q, stored as coefficients indexed by degree.

    The zero polynomial is the empty coefficient tuple; otherwise the last
    coefficient is nonzero.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, d: int) -> int:
        """Coefficient of q^d (zero outside the stored range)."""
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == QPolynomial((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return QPolynomial(out)

    def __mul__(self, other) -> "QPolynomial":
        if isinstance(other, int):
            return QPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPolynomial(out)

    __rmul__ = __mul__

    def div_exact(self, other: "QPolynomial") -> "QPolynomial":
        """Exact quotient in Z[q]; raises NotDivisibleError otherwise.

        Synthetic long division over the integers: each step requires the
        leading coefficient to divide exactly, and the remainder must vanish.
        """
        if other.is_zero():
            raise NotDivisibleError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        if self.degree < other.degree:
            raise NotDivisibleError("degree of dividend below degree of divisor")
        rem = list(self.coeffs)
        div = other.coeffs
        lead = div[-1]
        qdeg = len(rem) - len(div)
        quot = [0] * (qdeg + 1)
        for d in range(qdeg, -1, -1):
            top = rem[d + len(div) - 1]
            if top % lead != 0:
                raise NotDivisibleError("leading coefficient does not divide")
            c = top // lead
            quot[d] = c
            if c:
                for j, cd in enumerate(div):
                    rem[d + j] -= c * cd
        if any(rem):
            raise NotDivisibleError("nonzero remainder")
        return QPolynomial(quot)

    def truncated(self, k: int) -> "QPolynomial":
        """Reduction mod q^k (keep coefficients of degree < k)."""
        return QPolynomial(self.coeffs[:k])

    def reciprocal(self) -> "QPolynomial":
        """q^deg * f(1/q): the coefficient sequence reversed."""
        return QPolynomial(tuple(reversed(self.coeffs)))

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def text(self) -> str:
        """Render like "1 + 2*q + q^3", omitting zero terms."""
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                term = str(mag)
            elif mag == 1:
                term = "q" if d == 1 else f"q^{d}"
            else:
                term = f"{mag}*q" if d == 1 else f"{mag}*q^{d}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def to_json(self) -> list:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({self.text()})"


ZERO = QPolynomial()
ONE = QPolynomial((1,))


def mul(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    return a * b


def div_exact(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    return a.div_exact(b)


def q_int(d: int) -> QPolynomial:
    """The q-integer 1 + q + ... + q^(d-1), for d >= 1."""
    if d < 1:
        raise DomainError(f"q-integer needs d >= 1, got {d}")
    return QPolynomial((1,) * d)


def q_factorial(d: int) -> QPolynomial:
    """[d]! = [1][2]...[d]; the empty product for d = 0."""
    if d < 0:
        raise DomainError(f"q-factorial needs d >= 0, got {d}")
    out = ONE
    for i in range(2, d + 1):
        out = out * q_int(i)
    return out


def q_multinomial(parts: Sequence[int]) -> QPolynomial:
    """q-multinomial coefficient [sum parts]! / prod [part]!.

    The division is exact by the combinatorial interpretation (inversions of
    multiset arrangements); a nonzero remainder signals a bug.
    """
    parts = tuple(parts)
    if not parts:
        raise DomainError("q_multinomial needs at least one part")
    if any(p < 0 for p in parts):
        raise DomainError("q_multinomial parts must be nonnegative")
    out = q_factorial(sum(parts))
    for p in parts:
        out = out.div_exact(q_factorial(p))
    return out


def is_palindromic(f: QPolynomial) -> bool:
    """Whether coeff(d) = coeff(deg - d) for every d."""
    if f.is_zero():
        raise DomainError("palindromicity of the zero polynomial is undefined")
    cs = f.coeffs
    return cs == tuple(reversed(cs))


def symmetry_break_index(f: QPolynomial) -> Optional[int]:
    """Least d with coeff(d) != coeff(deg - d), or None if palindromic."""
    if f.is_zero():
        raise DomainError("symmetry of the zero polynomial is undefined")
    cs = f.coeffs
    deg = len(cs) - 1
    for d in range(deg // 2 + 1):
        if cs[d] != cs[deg - d]:
            return d
    return None


def check_multinomial_congruence(s: int, t: int, k: int) -> bool:
    """Whether [s+t+k; s,t,k] = [s+k; k] * [t+k; k] holds mod q^(k+1)."""
    lhs = q_multinomial((s, t, k)).truncated(k + 1)
    rhs = (q_multinomial((s, k)) * q_multinomial((t, k))).truncated(k + 1)
    return lhs == rhs
