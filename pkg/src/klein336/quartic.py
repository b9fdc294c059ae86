"""Exact invariance of the quartic form under the group.

In the unitary coordinates used throughout, the invariant quartic is

    x^4 + y^4 + z^4 - 3*conj(w)*(x^2 y^2 + x^2 z^2 + y^2 z^2),

and invariance is checked coefficient by coefficient after exact
substitution of the linear action.
"""

from __future__ import annotations

from typing import Iterator

from .group import GroupTable
from .linalg import Mat3
from .qfield import ALPHA_BAR, QNum, ZERO

Monomial = tuple[int, int, int]


def _degrevlex_key(m: Monomial) -> tuple:
    # descending degree-reverse-lexicographic = ascending lex on reversed exponents
    return (-sum(m), tuple(reversed(m)))


def degree4_monomials() -> list[Monomial]:
    out = [
        (i, j, 4 - i - j)
        for i in range(5)
        for j in range(5 - i)
    ]
    out.sort(key=_degrevlex_key)
    return out


class QuarticForm:
    """A homogeneous degree-4 form in three variables over the field."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Monomial, QNum]) -> None:
        clean = {}
        for mono, c in coeffs.items():
            if sum(mono) != 4 or len(mono) != 3 or any(e < 0 for e in mono):
                raise ValueError(f"not a degree-4 monomial: {mono}")
            if c:
                clean[mono] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QuarticForm is immutable")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuarticForm):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items(), key=lambda kv: _degrevlex_key(kv[0]))))

    def items(self) -> Iterator[tuple[Monomial, QNum]]:
        for mono in degree4_monomials():
            if mono in self.coeffs:
                yield mono, self.coeffs[mono]

    def __str__(self) -> str:
        parts = []
        for (i, j, k), c in self.items():
            vars_part = "".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip("xyz", (i, j, k))
                if e
            )
            parts.append(f"({c})*{vars_part}")
        return " + ".join(parts) if parts else "0"

    def evaluate(self, x: complex, y: complex, z: complex) -> complex:
        total = 0j
        for (i, j, k), c in self.coeffs.items():
            total += c.to_complex() * x**i * y**j * z**k
        return total


def klein_quartic() -> QuarticForm:
    minus3ab = QNum(-3) * ALPHA_BAR
    return QuarticForm(
        {
            (4, 0, 0): QNum(1),
            (0, 4, 0): QNum(1),
            (0, 0, 4): QNum(1),
            (2, 2, 0): minus3ab,
            (2, 0, 2): minus3ab,
            (0, 2, 2): minus3ab,
        }
    )


def _linear_form_power(coeffs: list[QNum], power: int) -> dict[Monomial, QNum]:
    """(c0 x + c1 y + c2 z)^power as an exponent-keyed dictionary."""
    acc: dict[tuple[int, int, int], QNum] = {(0, 0, 0): QNum(1)}
    for _ in range(power):
        nxt: dict[tuple[int, int, int], QNum] = {}
        for (i, j, k), c in acc.items():
            for var, cv in enumerate(coeffs):
                if not cv:
                    continue
                key = (i + (var == 0), j + (var == 1), k + (var == 2))
                prev = nxt.get(key, ZERO)
                nxt[key] = prev + c * cv
        acc = nxt
    return acc


def act(m: Mat3, form: QuarticForm) -> QuarticForm:
    """Right action (m . F)(v) = F(m v), expanded exactly."""
    rows = [list(r) for r in m.rows]
    out: dict[Monomial, QNum] = {}
    for (i, j, k), c in form.coeffs.items():
        term: dict[Monomial, QNum] = {(0, 0, 0): c}
        for var, power in ((0, i), (1, j), (2, k)):
            if power == 0:
                continue
            factor = _linear_form_power(rows[var], power)
            nxt: dict[Monomial, QNum] = {}
            for (a, b, d), c1 in term.items():
                for (e, f, g), c2 in factor.items():
                    key = (a + e, b + f, d + g)
                    prev = nxt.get(key, ZERO)
                    nxt[key] = prev + c1 * c2
            term = nxt
        for key, val in term.items():
            prev = out.get(key, ZERO)
            out[key] = prev + val
    return QuarticForm(out)


def verify_quartic_invariance(table: GroupTable, generators_only: bool = False) -> bool:
    form = klein_quartic()
    if generators_only:
        indices = [table.named["r1"], table.named["r2"], table.named["r3"]]
    else:
        indices = range(table.size)
    return all(act(table.elements[i].mat, form) == form for i in indices)
