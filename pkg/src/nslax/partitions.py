"""Partitions, Young diagrams, corner sets and contents.

Cells are ``(c, r)`` = (column, row), both from 0, so a partition with parts
``lam[0] >= lam[1] >= ...`` occupies ``{(c, r) : c < lam[r]}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Literal

from nslax.exactalg import ParamPoly, RationalFunction

Cell = tuple[int, int]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """From ``"2,1"``; ``""`` or ``"0"`` is the empty partition. Parts are sorted."""
        text = text.strip()
        if text in ("", "0", "()", "[]"):
            return cls(())
        return cls(sorted((int(t) for t in text.strip("()[]").split(",") if t.strip()), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, r: int) -> int:
        return self[r] if r < len(self) else 0

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def cells(self) -> list[Cell]:
        return [(c, r) for r, p in enumerate(self) for c in range(p)]

    def __contains__(self, cell) -> bool:  # cell membership, not part membership
        if isinstance(cell, tuple) and len(cell) == 2:
            c, r = cell
            return 0 <= r < len(self) and 0 <= c < self[r]
        return super().__contains__(cell)

    def add_cell(self, s: Cell) -> "Partition":
        c, r = s
        if c != self.part(r) or (r > 0 and self.part(r - 1) <= c):
            raise ValueError(f"{s} is not addable to {tuple(self)}")
        parts = list(self) + [0] * (r + 1 - len(self))
        parts[r] += 1
        return Partition(p for p in parts if p)

    def remove_cell(self, s: Cell) -> "Partition":
        c, r = s
        if r >= len(self) or c != self[r] - 1 or self.part(r + 1) > c:
            raise ValueError(f"{s} is not removable from {tuple(self)}")
        parts = list(self)
        parts[r] -= 1
        return Partition(p for p in parts if p)

    def to_json(self) -> list[int]:
        return list(self)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")" if self else "()"


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


def partition_count(n: int) -> int:
    return len(_partitions(n, n))


@dataclass(frozen=True)
class CornerData:
    addable: tuple[Cell, ...]
    removable: tuple[Cell, ...]
    outer: tuple[Cell, ...]


def corners(lam: Partition) -> CornerData:
    """Addable, removable and outer corners, each sorted by increasing column."""
    lam = Partition(lam)
    addable = []
    for r in range(len(lam) + 1):
        c = lam.part(r)
        if r == 0 or lam.part(r - 1) > c:
            addable.append((c, r))
    removable = [(lam[r] - 1, r) for r in range(len(lam)) if lam[r] > lam.part(r + 1)]
    key = lambda s: s[0]
    addable.sort(key=key)
    removable.sort(key=key)
    outer = [(c + 1, r + 1) for c, r in removable]
    return CornerData(tuple(addable), tuple(removable), tuple(outer))


def content(s: Cell) -> ParamPoly:
    """The linear form ``c*e1 + r*e2`` of the cell ``(c, r)``."""
    c, r = s
    return ParamPoly.linear(c, r)


def content_value(s: Cell, e1, e2) -> Fraction:
    c, r = s
    return c * Fraction(e1) + r * Fraction(e2)


def conjugate(lam: Partition) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > c) for c in range(lam[0]))


def reflect(s: Cell) -> Cell:
    c, r = s
    return (r, c)


@dataclass(frozen=True)
class TransitionWeight:
    """Uncancelled ratio of content products."""

    num: ParamPoly
    den: ParamPoly

    def at(self, e1, e2) -> Fraction:
        d = self.den.evaluate(e1, e2)
        if d == 0:
            raise ZeroDivisionError(f"weight denominator vanishes at ({e1}, {e2})")
        return self.num.evaluate(e1, e2) / d

    def equals(self, other: "TransitionWeight") -> bool:
        return self.num * other.den == other.num * self.den


def _diff(s: Cell, t: Cell) -> Cell:
    return (s[0] - t[0], s[1] - t[1])


def transition_weights(lam: Partition) -> dict[Cell, TransitionWeight]:
    """Transition-measure weight for each addable corner s.

    ``prod_{r outer} [s - r] / prod_{t addable, t != s} [s - t]``.
    """
    cd = corners(lam)
    out = {}
    for s in cd.addable:
        num = ParamPoly.const(1)
        for r in cd.outer:
            num = num * content(_diff(s, r))
        den = ParamPoly.const(1)
        for t in cd.addable:
            if t != s:
                den = den * content(_diff(s, t))
        out[s] = TransitionWeight(num, den)
    return out


def transition_weights_at(lam: Partition, e1, e2) -> dict[Cell, Fraction]:
    return {s: w.at(e1, e2) for s, w in transition_weights(lam).items()}


def t_lambda(lam: Partition, form: Literal["diagram", "corner"] = "corner") -> RationalFunction:
    """The eigenvalue function of the transfer operator on j_lambda, reduced.

    ``diagram`` multiplies a factor per cell of lambda; ``corner`` takes the
    ratio over outer and addable corners. Both reduce to the same function.
    """
    lam = Partition(lam)
    if form == "diagram":
        zeros, poles = [], [content((0, 0))]
        for c, r in lam.cells():
            zeros += [content((c, r)), content((c + 1, r + 1))]
            poles += [content((c + 1, r)), content((c, r + 1))]
    elif form == "corner":
        cd = corners(lam)
        zeros = [content(s) for s in cd.outer]
        poles = [content(s) for s in cd.addable]
    else:
        raise ValueError(f"unknown form {form!r}")
    return RationalFunction.from_linear_factors(zeros, poles)


def t_lambda_at(lam: Partition, u, e1, e2) -> Fraction:
    """T_lambda(u) at a rational point from the corner product."""
    cd = corners(lam)
    val = Fraction(1)
    for r in cd.outer:
        val *= u - content_value(r, e1, e2)
    for s in cd.addable:
        d = u - content_value(s, e1, e2)
        if d == 0:
            raise ZeroDivisionError(f"u = {u} is a pole of T_lambda")
        val /= d
    return val


def iter_addable_pairs(n: int) -> Iterator[tuple[Partition, Cell]]:
    for lam in enumerate_partitions(n):
        for s in corners(lam).addable:
            yield lam, s
