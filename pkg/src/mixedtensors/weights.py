"""Highest weights of Gl(m|n) and their text encoding."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotDominant, ParseError


@dataclass(frozen=True, order=True)
class HighestWeight:
    """Integral weight ``(λ_1, …, λ_m | λ_{m+1}, …, λ_{m+n})``.

    ``even`` holds the first m entries and ``odd`` the last n. Entries may be
    negative; dominance is checked by :meth:`check_dominant`.
    """

    even: tuple[int, ...]
    odd: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "even", tuple(int(x) for x in self.even))
        object.__setattr__(self, "odd", tuple(int(x) for x in self.odd))

    @property
    def m(self) -> int:
        return len(self.even)

    @property
    def n(self) -> int:
        return len(self.odd)

    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self.even, self.even[1:])) and all(
            a >= b for a, b in zip(self.odd, self.odd[1:])
        )

    def check_dominant(self, m: int | None = None, n: int | None = None) -> "HighestWeight":
        if (m is not None and m != self.m) or (n is not None and n != self.n):
            raise NotDominant(f"{self} is not a weight of Gl({m}|{n})")
        if not self.is_dominant():
            raise NotDominant(f"{self} is not dominant")
        return self

    def shift(self, r: int) -> "HighestWeight":
        """Tensor with ``Ber^r``."""
        return HighestWeight(tuple(x + r for x in self.even), tuple(x - r for x in self.odd))

    @property
    def degree(self) -> int:
        """Sum of the even entries; the degree of a maximally atypical Gl(n|n) weight."""
        return sum(self.even)

    def as_list(self) -> list[int]:
        return [*self.even, *self.odd]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.even)) + "|" + ",".join(map(str, self.odd)) + ")"


def trivial_weight(m: int, n: int) -> HighestWeight:
    return HighestWeight((0,) * m, (0,) * n)


def berezin(k: int, m: int, n: int) -> HighestWeight:
    """Highest weight of ``Ber^k``."""
    return trivial_weight(m, n).shift(k)


def symmetric_power(i: int, n: int) -> HighestWeight:
    """The maximally atypical Gl(n|n) weight ``S^i = [i, 0, …, 0]``."""
    return bracket_weight((i,) + (0,) * (n - 1))


def bracket_weight(entries) -> HighestWeight:
    """Maximally atypical Gl(n|n) weight ``[λ_1, …, λ_n] = (λ_1,…,λ_n | −λ_n,…,−λ_1)``."""
    entries = tuple(int(x) for x in entries)
    return HighestWeight(entries, tuple(-x for x in reversed(entries)))


def _parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ParseError(f"cannot parse integer list {text!r}") from exc


def parse_weight(text: str) -> HighestWeight:
    """Parse ``"(a,b,…|c,…)"``; negative entries allowed, no exponent sugar."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")) or s.count("|") != 1:
        raise ParseError(f"weight must look like (a,b|c,d), got {text!r}")
    left, right = s[1:-1].split("|")
    return HighestWeight(_parse_int_list(left), _parse_int_list(right))
