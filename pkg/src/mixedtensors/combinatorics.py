"""Partitions, bipartitions, Littlewood-Richardson coefficients and covariant modules.

All values are immutable. The LR and tableau-count caches are plain
``functools.lru_cache`` tables, which are safe to share between threads in
CPython and are unbounded for the lifetime of the process.
"""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import NotHook, ParseError
from .weights import HighestWeight


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros trimmed)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {tuple(parts)}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part, 1-based, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def is_hook(self, m: int, n: int) -> bool:
        return self.part(m + 1) <= n


EMPTY = Partition()


def conjugate(la: Partition) -> Partition:
    if not la:
        return EMPTY
    return Partition(sum(1 for p in la if p >= i) for i in range(1, la[0] + 1))


class Bipartition(NamedTuple):
    left: Partition
    right: Partition

    @classmethod
    def of(cls, left=(), right=()) -> "Bipartition":
        return cls(Partition(left), Partition(right))

    @property
    def size(self) -> int:
        return self.left.size + self.right.size

    @property
    def length(self) -> int:
        return len(self.left) + len(self.right)

    @property
    def degree(self) -> tuple[int, int]:
        return (self.left.size, self.right.size)

    def swap(self) -> "Bipartition":
        """Bipartition of the dual mixed tensor."""
        return Bipartition(self.right, self.left)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.left)) + "|" + ",".join(map(str, self.right)) + ")"

    def __repr__(self) -> str:
        return f"Bipartition{str(self)}"


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def _parse_parts(text: str) -> Partition:
    text = text.strip()
    parts: list[int] = []
    if text:
        for tok in text.split(","):
            match = _TOKEN.match(tok)
            if not match:
                raise ParseError(f"bad partition entry {tok!r}")
            value, times = int(match.group(1)), int(match.group(2) or 1)
            parts.extend([value] * times)
    try:
        return Partition(parts)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_partition(text: str) -> Partition:
    """Parse ``"(2,1)"``, ``"()"`` or ``"(1^4)"``; parentheses optional."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if "|" in s:
        raise ParseError(f"expected a partition, got {text!r}")
    return _parse_parts(s)


def parse_bipartition(text: str) -> Bipartition:
    """Parse ``"(2,1|1,1)"``; exponent sugar such as ``"(1^4|1)"`` is accepted."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if s.count("|") != 1:
        raise ParseError(f"bipartition must look like (p|q), got {text!r}")
    left, right = s.split("|")
    return Bipartition(_parse_parts(left), _parse_parts(right))


# --------------------------------------------------------------------------
# enumeration helpers


def partitions_of(k: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of k in reverse lexicographic order."""
    if max_part is None:
        max_part = k
    if k == 0:
        yield EMPTY
        return
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions_of(k - first, first):
            yield Partition((first, *rest))


def subpartitions(la: Partition) -> Iterator[Partition]:
    """All partitions contained in ``la`` (including empty and ``la`` itself)."""

    def rec(i: int, bound: int) -> Iterator[tuple[int, ...]]:
        if i == len(la):
            yield ()
            return
        for p in range(min(bound, la[i]), -1, -1):
            if p == 0:
                yield ()
            else:
                for rest in rec(i + 1, p):
                    yield (p, *rest)

    for parts in rec(0, la[0] if la else 0):
        yield Partition(parts)


def bipartitions_of_degree(r: int, s: int) -> Iterator[Bipartition]:
    for left in partitions_of(r):
        for right in partitions_of(s):
            yield Bipartition(left, right)


def bipartitions_up_to(size: int) -> Iterator[Bipartition]:
    for total in range(size + 1):
        for r in range(total + 1):
            yield from bipartitions_of_degree(r, total - r)


# --------------------------------------------------------------------------
# Littlewood-Richardson coefficients


@lru_cache(maxsize=None)
def _lr_skew(outer: Partition, inner: Partition) -> tuple[tuple[Partition, int], ...]:
    if not outer.contains(inner):
        return ()
    # reading order: rows top to bottom, each row right to left
    cells = [(r, c) for r in range(len(outer)) for c in range(outer[r] - 1, inner.part(r + 1) - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(outer) + 2)
    found: Counter = Counter()

    def place(idx: int) -> None:
        if idx == len(cells):
            found[Partition(counts[1:])] += 1
            return
        r, c = cells[idx]
        upper = filling.get((r, c + 1), r + 1)
        lower = filling[(r - 1, c)] + 1 if (r - 1, c) in filling else 1
        for v in range(lower, min(upper, r + 1) + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            place(idx + 1)
            counts[v] -= 1
            del filling[(r, c)]

    place(0)
    return tuple(sorted(found.items()))


def lr_skew(outer: Partition, inner: Partition) -> dict[Partition, int]:
    """Expansion ``s_{outer/inner} = Σ_ν c^{outer}_{inner,ν} s_ν`` by LR-tableau enumeration."""
    return dict(_lr_skew(Partition(outer), Partition(inner)))


def lr_coeff(la: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient ``c^λ_{μν}``."""
    la, mu, nu = Partition(la), Partition(mu), Partition(nu)
    if mu.size + nu.size != la.size:
        return 0
    return lr_skew(la, mu).get(nu, 0)


@lru_cache(maxsize=None)
def _lr_product(a: Partition, b: Partition) -> tuple[tuple[Partition, int], ...]:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    # a placed strictly north-east of b: the skew Schur function is s_a * s_b
    outer = Partition([b[0] + p for p in a] + list(b))
    inner = Partition([b[0]] * len(a))
    return _lr_skew(outer, inner)


def lr_product(a: Partition, b: Partition) -> dict[Partition, int]:
    """Expansion ``s_a s_b = Σ_ν c^ν_{ab} s_ν``."""
    return dict(_lr_product(Partition(a), Partition(b)))


# --------------------------------------------------------------------------
# semistandard and hook tableaux


def _horizontal_strip_removals(outer: Partition, inner: Partition) -> Iterator[Partition]:
    """Shapes ``mu`` with inner ⊆ mu ⊆ outer and outer/mu a horizontal strip."""
    rows = len(outer)

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == rows:
            yield ()
            return
        lo = max(outer.part(i + 2), inner.part(i + 1))
        for p in range(lo, outer[i] + 1):
            for rest in rec(i + 1):
                yield (p, *rest)

    for parts in rec(0):
        yield Partition(parts)


@lru_cache(maxsize=None)
def ssyt_count(outer: Partition, inner: Partition, letters: int) -> int:
    """Number of semistandard tableaux of shape outer/inner with entries in 1..letters."""
    if not outer.contains(inner):
        return 0
    if outer == inner:
        return 1
    if letters == 0:
        return 0
    return sum(ssyt_count(mu, inner, letters - 1) for mu in _horizontal_strip_removals(outer, inner))


@lru_cache(maxsize=None)
def _ssyt_contents(outer: Partition, inner: Partition, letters: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    if not outer.contains(inner):
        return ()
    if letters == 0:
        return (((), 1),) if outer == inner else ()
    acc: Counter = Counter()
    for mu in _horizontal_strip_removals(outer, inner):
        strip = outer.size - mu.size
        for content, mult in _ssyt_contents(mu, inner, letters - 1):
            acc[content + (strip,)] += mult
    return tuple(sorted(acc.items()))


def ssyt_contents(outer: Partition, inner: Partition, letters: int) -> dict[tuple[int, ...], int]:
    """Content generating function: ``{(#1, …, #letters): count}``."""
    return dict(_ssyt_contents(Partition(outer), Partition(inner), letters))


def covariant_dim(la: Partition, m: int, n: int) -> int:
    """Dimension of ``S_λ(k^{m|n})``: the number of (m|n)-hook tableaux of shape λ.

    Unprimed letters fill a subshape ``mu`` as an ordinary SSYT; primed letters
    fill λ/mu with strict rows and weak columns, i.e. the conjugate skew
    shape is an ordinary SSYT in n letters.
    """
    la = Partition(la)
    if not la.is_hook(m, n):
        return 0
    la_conj = conjugate(la)
    total = 0
    for mu in subpartitions(la):
        if len(mu) > m:
            continue
        total += ssyt_count(mu, EMPTY, m) * ssyt_count(la_conj, conjugate(mu), n)
    return total


def hook_character(la: Partition, m: int, n: int) -> dict[tuple[int, ...], int]:
    """Character of ``S_λ(k^{m|n})`` as ``{exponent vector (x_1..x_m, y_1..y_n): coefficient}``."""
    la = Partition(la)
    if not la.is_hook(m, n):
        return {}
    la_conj = conjugate(la)
    acc: Counter = Counter()
    for mu in subpartitions(la):
        if len(mu) > m:
            continue
        xs = ssyt_contents(mu, EMPTY, m)
        ys = ssyt_contents(la_conj, conjugate(mu), n)
        for ex, a in xs.items():
            for ey, b in ys.items():
                acc[ex + ey] += a * b
    return {k: v for k, v in acc.items() if v}


def covariant_weight(la: Partition, m: int, n: int) -> HighestWeight:
    """Highest weight of the covariant module ``S_λ(k^{m|n})``."""
    la = Partition(la)
    if not la.is_hook(m, n):
        raise NotHook(f"{la} is not an ({m}|{n})-hook partition")
    conj = conjugate(la)
    return HighestWeight(
        tuple(la.part(i) for i in range(1, m + 1)),
        tuple(max(0, conj.part(j) - m) for j in range(1, n + 1)),
    )


# --------------------------------------------------------------------------
# Grothendieck ring elements


class RingElement(Mapping):
    """Finite integer combination of bipartitions. Zero coefficients are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Bipartition, int] | Iterable[tuple[Bipartition, int]] = ()):
        acc: Counter = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            acc[Bipartition(Partition(key[0]), Partition(key[1]))] += coeff
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def basis(cls, la: Bipartition) -> "RingElement":
        return cls({la: 1})

    def __getitem__(self, key) -> int:
        return self._terms[key]

    def get(self, key, default=0):
        return self._terms.get(key, default)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "RingElement") -> "RingElement":
        acc = Counter(self._terms)
        acc.update(other._terms)
        return RingElement(acc)

    def __neg__(self) -> "RingElement":
        return RingElement({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __mul__(self, scalar: int) -> "RingElement":
        if not isinstance(scalar, int):
            return NotImplemented
        return RingElement({k: scalar * v for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self == RingElement(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def sorted_terms(self) -> list[tuple[Bipartition, int]]:
        """Terms by degree descending, then lexicographically."""
        return sorted(self._terms.items(), key=lambda kv: (-kv[0].size, kv[0]))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{b}" if c != 1 else str(b) for b, c in self.sorted_terms())
