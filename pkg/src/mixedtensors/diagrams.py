"""Weight diagrams of highest weights and of bipartitions.

A diagram labels every integer vertex by one of ``^ v x o``. Outside a finite
window the labels agree with a left and a right tail label. Highest-weight
diagrams have both tails ``^``; bipartition diagrams have ``^`` on the left
and ``v`` on the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

from .combinatorics import Bipartition, Partition
from .errors import DifferentBlock, MalformedDiagram, UnsupportedRank
from .weights import HighestWeight


class Label(str, Enum):
    UP = "^"
    DOWN = "v"
    CROSS = "x"
    CIRCLE = "o"


UP, DOWN, CROSS, CIRCLE = "^", "v", "x", "o"
_FLIP = {UP: DOWN, DOWN: UP}


@dataclass(frozen=True)
class WeightDiagram:
    """Labels on ``[lo, lo + len(labels))`` plus constant tails on either side.

    Instances built through :meth:`build` are canonical, so ``==`` compares
    diagrams rather than representations.
    """

    lo: int
    labels: str
    left: str = UP
    right: str = UP

    @property
    def hi(self) -> int:
        return self.lo + len(self.labels) - 1

    def __getitem__(self, v: int) -> str:
        if v < self.lo:
            return self.left
        if v > self.hi:
            return self.right
        return self.labels[v - self.lo]

    @classmethod
    def build(cls, lo: int, hi: int, label_at: Callable[[int], str], left: str = UP, right: str = UP) -> "WeightDiagram":
        """Canonical diagram from labels on ``[lo, hi]``; outside it the tails apply."""
        raw = "".join(label_at(v) for v in range(lo, hi + 1))
        return cls._canonical(lo, raw, left, right)

    @classmethod
    def from_dict(cls, labels: dict[int, str], left: str = UP, right: str = UP) -> "WeightDiagram":
        if not labels:
            return cls._canonical(0, "", left, right)
        lo, hi = min(labels), max(labels)
        return cls.build(lo, hi, lambda v: labels.get(v, left if v < lo else right), left, right)

    @classmethod
    def _canonical(cls, lo: int, raw: str, left: str, right: str) -> "WeightDiagram":
        # smallest [a, b] outside of which the tails hold, then one vertex of margin
        a = 0
        while a < len(raw) and raw[a] == left:
            a += 1
        b = len(raw) - 1
        while b >= a and raw[b] == right:
            b -= 1
        if a > b:
            # nothing but the tails: anchor at the split point, or at 0
            if left == right:
                return cls(-1, left * 3, left, right)
            return cls(lo + a - 1, left + right, left, right)
        return cls(lo + a - 1, left + raw[a : b + 1] + right, left, right)

    def positions(self, *symbols: str) -> list[int]:
        """Window vertices carrying one of ``symbols`` (tails excluded)."""
        return [self.lo + i for i, c in enumerate(self.labels) if c in symbols]

    def with_labels(self, changes: dict[int, str]) -> "WeightDiagram":
        lo = min([self.lo, *changes]) - 1
        hi = max([self.hi, *changes]) + 1
        return WeightDiagram.build(lo, hi, lambda v: changes.get(v, self[v]), self.left, self.right)

    def shift(self, r: int) -> "WeightDiagram":
        return WeightDiagram.build(self.lo + r, self.hi + r, lambda v: self[v - r], self.left, self.right)

    def block_key(self) -> tuple[frozenset[int], frozenset[int]]:
        return frozenset(self.positions(CROSS)), frozenset(self.positions(CIRCLE))

    def render(self, lo: int | None = None, hi: int | None = None) -> str:
        """Two lines: the labels and a ruler marking 0 and every fifth vertex."""
        lo = min(self.lo, 0) if lo is None else lo
        hi = max(self.hi, 0) if hi is None else hi
        top = "".join(self[v] for v in range(lo, hi + 1))
        ruler = "".join("0" if v == 0 else "|" if v % 5 == 0 else "." for v in range(lo, hi + 1))
        return f"{top}\n{ruler}   [{lo}..{hi}]"

    def __str__(self) -> str:
        return f"{self.left}..[{self.lo}]{self.labels}..{self.right}"


# --------------------------------------------------------------------------
# highest weights


def diagram_of_weight(w: HighestWeight, m: int, n: int) -> WeightDiagram:
    w.check_dominant(m, n)
    crosses = {w.even[i] - i for i in range(m)}
    circles = {(j + 1) - m - w.odd[j] for j in range(n)}
    occupied = crosses | circles
    if not occupied:
        return WeightDiagram.build(0, 0, lambda v: UP)

    def label(v: int) -> str:
        if v in crosses:
            return DOWN if v in circles else CROSS
        return CIRCLE if v in circles else UP

    return WeightDiagram.build(min(occupied), max(occupied), label)


def weight_of_diagram(D: WeightDiagram, m: int, n: int) -> HighestWeight:
    if D.left != UP or D.right != UP:
        raise MalformedDiagram("highest-weight diagrams need ^ tails")
    xs = sorted(D.positions(CROSS, DOWN), reverse=True)
    os_ = sorted(D.positions(CIRCLE, DOWN))
    if len(xs) != m or len(os_) != n:
        raise MalformedDiagram(f"expected {m} vertices in x/v and {n} in o/v, got {len(xs)} and {len(os_)}")
    return HighestWeight(tuple(x + i for i, x in enumerate(xs)), tuple((j + 1) - m - o for j, o in enumerate(os_)))


def berezin_shift(w: HighestWeight, r: int, m: int | None = None, n: int | None = None) -> HighestWeight:
    return w.shift(r)


def atypicality(w: HighestWeight) -> int:
    return len(diagram_of_weight(w, w.m, w.n).positions(DOWN))


def is_kostant(w: HighestWeight, m: int | None = None, n: int | None = None) -> bool:
    D = diagram_of_weight(w, w.m if m is None else m, w.n if n is None else n)
    downs = D.positions(DOWN)
    if len(downs) < 2:
        return True
    return all(D[v] != UP for v in range(downs[0], downs[-1] + 1))


# --------------------------------------------------------------------------
# bipartitions


def diagram_of_bipartition(la: Bipartition, delta: int) -> WeightDiagram:
    left, right = Partition(la[0]), Partition(la[1])
    # I_^ covers every vertex <= -len(left); I_v every vertex >= len(right)+1-delta
    lo = min(-len(left), 1 - delta - (right[0] if right else 0)) - 1
    hi = max(left[0] if left else 0, len(right) + 1 - delta) + 1
    ups = {left.part(i) - i + 1 for i in range(1, hi - lo + len(left) + 2)}
    downs = {i - delta - right.part(i) for i in range(1, hi - lo + len(right) + delta + 2)}

    def label(v: int) -> str:
        if v in ups:
            return CROSS if v in downs else UP
        return DOWN if v in downs else CIRCLE

    return WeightDiagram.build(lo, hi, label, UP, DOWN)


def bipartition_of_diagram(D: WeightDiagram, delta: int) -> Bipartition:
    if D.left != UP or D.right != DOWN:
        raise MalformedDiagram("bipartition diagrams need a ^ tail on the left and a v tail on the right")
    ups = sorted(D.positions(UP, CROSS), reverse=True)
    downs = D.positions(DOWN, CROSS)
    # the first tail vertex continues each enumeration; its part must vanish
    left = [a + i for i, a in enumerate(ups)] + [D.lo - 1 + len(ups)]
    right = [(i + 1) - delta - b for i, b in enumerate(downs)] + [len(downs) + 1 - delta - (D.hi + 1)]
    if left[-1] != 0 or right[-1] != 0:
        raise MalformedDiagram(f"diagram {D} is not a bipartition diagram at delta={delta}")
    try:
        return Bipartition(Partition(left), Partition(right))
    except ValueError as exc:
        raise MalformedDiagram(str(exc)) from exc


def caps_of(D: WeightDiagram) -> list[tuple[int, int]]:
    """Greedy ``v … ^`` pairs (v left, ^ right), sorted by left end."""
    stack: list[int] = []
    caps = []
    for v in range(D.lo, D.hi + 1):
        c = D[v]
        if c == DOWN:
            stack.append(v)
        elif c == UP and stack:
            caps.append((stack.pop(), v))
    return sorted(caps)


def cups_of(D: WeightDiagram) -> list[tuple[int, int]]:
    """Cups of a highest-weight diagram: every ``v`` is joined to an ``^`` on its right."""
    if D.right != UP:
        raise MalformedDiagram("cups need a ^ tail on the right")
    stack: list[int] = []
    cups = []
    v = D.lo
    while v <= D.hi or stack:
        c = D[v]
        if c == DOWN:
            stack.append(v)
        elif c == UP and stack:
            cups.append((stack.pop(), v))
        v += 1
    return sorted(cups)


def is_cross(la: Bipartition, m: int, n: int) -> bool:
    left, right = la
    return any(left.part(i) + right.part(m + 2 - i) < n + 1 for i in range(1, m + 2))


@dataclass(frozen=True)
class Invariants:
    d: int
    rk: int
    k: int
    atyp: int
    is_cross: bool

    @property
    def is_zero(self) -> bool:
        return not self.is_cross


def check_rank(m: int, n: int) -> int:
    if m < n or n < 0:
        raise UnsupportedRank(f"only m >= n >= 0 is supported, got Gl({m}|{n})")
    return m - n


def invariants_of(la: Bipartition, m: int, n: int) -> Invariants:
    delta = check_rank(m, n)
    D = diagram_of_bipartition(la, delta)
    d = len(caps_of(D))
    rk = len(D.positions(CIRCLE))
    return Invariants(d, rk, d + rk, n - rk, is_cross(la, m, n))


# --------------------------------------------------------------------------
# orders and blocks


def _same_block(a: WeightDiagram, b: WeightDiagram) -> None:
    if a.block_key() != b.block_key() or len(a.positions(DOWN)) != len(b.positions(DOWN)):
        raise DifferentBlock(f"{a} and {b} lie in different blocks")


def bruhat_leq(a: WeightDiagram, b: WeightDiagram) -> bool:
    """``a <= b``: b arises from a by moving ``v``'s to the right."""
    _same_block(a, b)
    da, db = a.positions(DOWN), b.positions(DOWN)
    lo, hi = min(a.lo, b.lo), max(a.hi, b.hi)
    ca = cb = 0
    for v in range(lo, hi + 1):
        ca += v in da
        cb += v in db
        if ca < cb:
            return False
    return True


def oriented_subset_diagrams(rho: WeightDiagram, mu: WeightDiagram) -> bool:
    _same_block(rho, mu)
    cups = cups_of(rho)
    ends = set()
    for i, j in cups:
        if {mu[i], mu[j]} != {UP, DOWN}:
            return False
        ends.update((i, j))
    hi = max([rho.hi, mu.hi, *ends])
    rays = [mu[v] for v in range(min(rho.lo, mu.lo), hi + 1) if v not in ends and mu[v] in (UP, DOWN)]
    rays.append(mu.right)
    return DOWN not in rays or UP not in rays[rays.index(DOWN) :]


def oriented_subset(rho: HighestWeight, mu: HighestWeight, m: int, n: int) -> bool:
    """``rho ⊂ mu``: mu orients the cup diagram of rho consistently."""
    return oriented_subset_diagrams(diagram_of_weight(rho, m, n), diagram_of_weight(mu, m, n))


def flip(D: WeightDiagram, vertices: Iterable[int]) -> WeightDiagram:
    return D.with_labels({v: _FLIP[D[v]] for v in vertices})


def swap_pairs(D: WeightDiagram, pairs: Iterable[tuple[int, int]]) -> WeightDiagram:
    """Exchange the two labels at each pair of vertices."""
    changes: dict[int, str] = {}
    for i, j in pairs:
        changes[i], changes[j] = D[j], D[i]
    return D.with_labels(changes) if changes else D
