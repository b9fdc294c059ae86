"""Exact arithmetic in the imaginary quadratic field Q(w), w = (1 + i*sqrt(7))/2.

The generator w satisfies w**2 = w - 2, its conjugate is 1 - w, and
w * (1 - w) = 2.  Every value is a pair of exact rationals (x, y)
representing x + y*w; no floating point enters any structural decision.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction]

_SQRT7 = 7 ** 0.5
_W_COMPLEX = complex(0.5, _SQRT7 / 2)


def _frac_str(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


class QNum:
    """An element x + y*w of Q(w)."""

    __slots__ = ("x", "y")

    def __init__(self, x: Rational = 0, y: Rational = 0) -> None:
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("QNum is immutable")

    def __repr__(self) -> str:
        return f"QNum({self.x!r}, {self.y!r})"

    def __str__(self) -> str:
        if self.y == 0:
            return _frac_str(self.x)
        wpart = "w" if abs(self.y) == 1 else f"{_frac_str(abs(self.y))}*w"
        if self.x == 0:
            return wpart if self.y > 0 else f"-{wpart}"
        sign = "+" if self.y > 0 else "-"
        return f"{_frac_str(self.x)}{sign}{wpart}"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QNum):
            return self.x == other.x and self.y == other.y
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __bool__(self) -> bool:
        return self.x != 0 or self.y != 0

    def __add__(self, other: QNum | Rational) -> QNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QNum(self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __sub__(self, other: QNum | Rational) -> QNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QNum(self.x - other.x, self.y - other.y)

    def __rsub__(self, other: QNum | Rational) -> QNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> QNum:
        return QNum(-self.x, -self.y)

    def __mul__(self, other: QNum | Rational) -> QNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # (x1 + y1 w)(x2 + y2 w) with w^2 = w - 2
        return QNum(
            self.x * other.x - 2 * self.y * other.y,
            self.x * other.y + self.y * other.x + self.y * other.y,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: QNum | Rational) -> QNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other: QNum | Rational) -> QNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int) -> QNum:
        if n < 0:
            return self.inv() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> QNum:
        """Complex conjugate: conj(x + y*w) = (x + y) - y*w."""
        return QNum(self.x + self.y, -self.y)

    def norm(self) -> Fraction:
        """Field norm x^2 + xy + 2y^2, a nonnegative rational."""
        return self.x * self.x + self.x * self.y + 2 * self.y * self.y

    def inv(self) -> QNum:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conj()
        return QNum(c.x / n, c.y / n)

    def is_rational(self) -> bool:
        return self.y == 0

    def is_integral(self) -> bool:
        """True iff the value lies in Z[w]."""
        return self.x.denominator == 1 and self.y.denominator == 1

    def is_half_integral(self) -> bool:
        """True iff the value lies in (1/2) Z[w]."""
        return self.x.denominator in (1, 2) and self.y.denominator in (1, 2)

    def to_complex(self) -> complex:
        """Float embedding w -> (1 + i*sqrt(7))/2; for eigenvalue snapping only."""
        return float(self.x) + float(self.y) * _W_COMPLEX

    @classmethod
    def parse(cls, text: str) -> QNum:
        """Parse the wire encoding "x+y*w"; inverse of str() bit-exactly."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty QNum literal")
        x = Fraction(0)
        y = Fraction(0)
        for term in _TERM_RE.findall(s):
            if term in ("w", "+w"):
                y += 1
            elif term == "-w":
                y -= 1
            elif term.endswith("*w"):
                y += Fraction(term[:-2])
            else:
                x += Fraction(term)
        got = cls(x, y)
        return got


_TERM_RE = re.compile(r"[+-]?[^+-]+")


def _coerce(value) -> QNum | None:
    if isinstance(value, QNum):
        return value
    if isinstance(value, (int, Fraction)):
        return QNum(value)
    return None


ZERO = QNum(0)
ONE = QNum(1)
TWO = QNum(2)
MINUS_ONE = QNum(-1)
ALPHA = QNum(0, 1)
ALPHA_BAR = QNum(1, -1)
# i*sqrt(7) = 2w - 1
I_SQRT7 = QNum(-1, 2)

# --- vectors over Q(w) ------------------------------------------------------
#
# A CVec3 is a plain tuple of three QNum values.

CVec3 = tuple[QNum, QNum, QNum]


def vec3(a, b, c) -> CVec3:
    return (_as_qnum(a), _as_qnum(b), _as_qnum(c))


def _as_qnum(v) -> QNum:
    q = _coerce(v)
    if q is None:
        raise TypeError(f"cannot interpret {v!r} as a field element")
    return q


def vadd(u: CVec3, v: CVec3) -> CVec3:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def vsub(u: CVec3, v: CVec3) -> CVec3:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def vneg(u: CVec3) -> CVec3:
    return (-u[0], -u[1], -u[2])


def vscale(s: QNum | Rational, u: CVec3) -> CVec3:
    s = _as_qnum(s)
    return (s * u[0], s * u[1], s * u[2])


def hermitian(x: CVec3, y: CVec3) -> QNum:
    """Hermitian scalar product (x, y) = (1/2) * sum conj(x_i) * y_i."""
    total = ZERO
    for xi, yi in zip(x, y):
        total = total + xi.conj() * yi
    return QNum(total.x / 2, total.y / 2)


def vec_is_zero(u: Iterable[QNum]) -> bool:
    return all(not q for q in u)
