"""The socle map θ, the highest-weight constituent, classification and inverses."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import Bipartition, Partition, conjugate
from .diagrams import (
    CIRCLE,
    CROSS,
    DOWN,
    UP,
    WeightDiagram,
    bipartition_of_diagram,
    caps_of,
    check_rank,
    cups_of,
    diagram_of_bipartition,
    diagram_of_weight,
    invariants_of,
    is_cross,
    is_kostant,
    swap_pairs,
    weight_of_diagram,
)
from .errors import (
    MalformedDiagram,
    NotCross,
    NotInImage,
    NotKostant,
    NotMaximalAtypical,
    NotPositive,
    TooAtypical,
)
from .weights import HighestWeight


class Kind(enum.Enum):
    IRREDUCIBLE = "Irreducible"
    PROJECTIVE = "Projective"
    PROJECTIVE_IRREDUCIBLE = "ProjectiveIrreducible"
    GENERAL = "General"


class Mode(enum.Enum):
    IRREDUCIBLE = "Irreducible"
    PROJECTIVE_COVER = "ProjectiveCover"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    loewy_length: int
    socle: HighestWeight
    atyp: int
    d: int
    k: int


def _require_cross(la: Bipartition, m: int, n: int) -> int:
    delta = check_rank(m, n)
    if not is_cross(la, m, n):
        raise NotCross(f"{la} is not ({m}|{n})-cross")
    return delta


def _flip(c: str) -> str:
    return {UP: DOWN, DOWN: UP}.get(c, c)


@lru_cache(maxsize=None)
def theta_diagram(la: Bipartition, m: int, n: int) -> WeightDiagram:
    delta = _require_cross(la, m, n)
    D = diagram_of_bipartition(la, delta)
    caps = caps_of(D)
    ends = {v for cap in caps for v in cap}
    k = len(caps) + len(D.positions(CIRCLE))
    special = D.positions(CROSS, CIRCLE) + sorted(ends)
    if special:
        M = max(special)
        T = max(k + 1, M + 1)
        X = 0 if M + 1 <= k + 1 else M - k
    else:
        T, X = k + 1, 0
    hi = max(D.hi, T) + 1
    labels = {v: _flip(D[v]) for v in range(T, hi + 1)}
    todo, v = X + n - k, T - 1
    while todo > 0:
        if D[v] in (UP, DOWN) and v not in ends:
            labels[v] = _flip(D[v])
            todo -= 1
        v -= 1
    lo = min(D.lo, v) - 1
    return WeightDiagram.build(lo, hi, lambda u: labels.get(u, D[u]), UP, UP)


def theta(la: Bipartition, m: int, n: int) -> HighestWeight:
    """Highest weight of the socle (and head) of ``R(λ)``."""
    la = Bipartition(Partition(la[0]), Partition(la[1]))
    return weight_of_diagram(theta_diagram(la, m, n), m, n)


def a_weight(la: Bipartition, m: int, n: int) -> HighestWeight:
    """Highest-weight composition factor ``A_λ``: θ(λ) with every cap of λ reversed."""
    la = Bipartition(Partition(la[0]), Partition(la[1]))
    delta = _require_cross(la, m, n)
    caps = caps_of(diagram_of_bipartition(la, delta))
    return weight_of_diagram(swap_pairs(theta_diagram(la, m, n), caps), m, n)


def classify(la: Bipartition, m: int, n: int) -> Classification:
    _require_cross(la, m, n)
    inv = invariants_of(la, m, n)
    if inv.d == 0:
        kind = Kind.PROJECTIVE_IRREDUCIBLE if inv.k == n else Kind.IRREDUCIBLE
    else:
        kind = Kind.PROJECTIVE if inv.k == n else Kind.GENERAL
    return Classification(kind, 2 * inv.d + 1, theta(la, m, n), inv.atyp, inv.d, inv.k)


# --------------------------------------------------------------------------
# inverses


def _coerce_mode(mode) -> Mode:
    return mode if isinstance(mode, Mode) else Mode(mode)


@lru_cache(maxsize=None)
def theta_inverse(w: HighestWeight, mode: Mode | str, m: int, n: int) -> Bipartition:
    """The unique λ with θ(λ) = w and d(λ) = 0 (Irreducible) or k(λ) = n (ProjectiveCover)."""
    mode = _coerce_mode(mode)
    delta = check_rank(m, n)
    W = diagram_of_weight(w, m, n)
    cups = cups_of(W) if mode is Mode.PROJECTIVE_COVER else []
    fixed: dict[int, str] = {v: W[v] for v in W.positions(CROSS, CIRCLE)}
    for i, j in cups:
        fixed[i], fixed[j] = DOWN, UP
    # the left tail must close up: #(^ and x at vertices >= p) = 1 - p far left,
    # which pins the ^/v boundary b to this range
    base = 1 - len(W.positions(CROSS)) - len(cups)
    lo, hi = min([W.lo, *fixed]) - 1, max([W.hi, *fixed]) + 1
    for b in range(base - 1, base + len(fixed) + 2):
        D = WeightDiagram.build(min(lo, b) - 1, max(hi, b) + 1, lambda v: fixed.get(v, UP if v < b else DOWN), UP, DOWN)
        try:
            la = bipartition_of_diagram(D, delta)
        except MalformedDiagram:
            continue
        if not is_cross(la, m, n):
            continue
        if sorted(caps_of(D)) != sorted(cups):
            continue
        if theta(la, m, n) == w:
            return la
    raise NotInImage(f"{w} has no {mode.value} preimage under theta in Gl({m}|{n})")


def socle_embedding(w: HighestWeight, n: int) -> Bipartition:
    """For positive maximally atypical ``w`` with k nonzero entries: the λ of defect k,
    ``l(λ^L) = k`` and ``λ^R = (λ^L)*``, whose socle is ``w``."""
    m = n
    W = diagram_of_weight(w, m, n)
    if len(W.positions(DOWN)) != n:
        raise NotMaximalAtypical(f"{w} is not maximally atypical")
    if any(x < 0 for x in w.even):
        raise NotPositive(f"{w} is not positive")
    nonzero = [i for i, x in enumerate(w.even) if x != 0]
    cup_end = dict(cups_of(W))
    tops = [cup_end[w.even[i] - i] for i in nonzero]
    left = Partition(v + i for i, v in enumerate(tops))
    la = Bipartition(left, conjugate(left))
    if theta(la, m, n) != w:
        raise NotInImage(f"no socle embedding found for {w}")
    return la


def dual_irreducible(w: HighestWeight, m: int, n: int) -> HighestWeight:
    """Highest weight of ``L(w)^∨``."""
    la = theta_inverse(w, Mode.PROJECTIVE_COVER, m, n)
    return theta(la.swap(), m, n)


def involution_I(la: Bipartition, n: int) -> Bipartition:
    _require_cross(la, n, n)
    return Bipartition(conjugate(la.right), conjugate(la.left))


def kostant_normalize(w: HighestWeight, m: int, n: int) -> tuple[int, Bipartition]:
    """``(r, λ)`` with ``d(λ) = 0`` and ``θ(λ) = Ber^r ⊗ w``, minimal ``|r|``."""
    W = diagram_of_weight(w, m, n)
    if not is_kostant(w, m, n):
        raise NotKostant(f"{w} is not a Kostant weight")
    if len(W.positions(DOWN)) >= m:
        raise TooAtypical(f"{w} has atypicality >= {m}")
    bound = (W.hi - W.lo) + m + n + sum(abs(x) for x in w.as_list())
    for r in sorted(range(-bound, bound + 1), key=lambda r: (abs(r), r)):
        try:
            return r, theta_inverse(w.shift(r), Mode.IRREDUCIBLE, m, n)
        except NotInImage:
            continue
    raise NotInImage(f"no Berezin twist of {w} is an irreducible mixed tensor")


# --------------------------------------------------------------------------
# independent construction through the matching


def theta_by_matching(la: Bipartition, m: int, n: int) -> HighestWeight:
    """θ(λ) obtained by joining the cap diagram of λ to the trivial block.

    The top number line carries the cup diagram with k(λ) cups of the
    trivial-bipartition block; rays are joined to the free vertices of λ
    order-preservingly and the bottom reads off the trivial weight's labels.
    """
    delta = _require_cross(la, m, n)
    D = diagram_of_bipartition(la, delta)
    caps = caps_of(D)
    k = len(caps) + len(D.positions(CIRCLE))
    zeta = diagram_of_weight(HighestWeight((0,) * m, (0,) * n), m, n)
    top_blocked = set(range(1 - delta, 1)) | {-delta - i + 1 for i in range(1, k + 1)} | set(range(1, k + 1))
    bottom_blocked = set(D.positions(CROSS, CIRCLE)) | {v for cap in caps for v in cap}
    start = max(D.hi, zeta.hi, k) + m + n + 3
    stop = min(D.lo, zeta.lo, -delta - n) - m - n - 3
    tops = [v for v in range(start, stop - 4 * (m + n + 2), -1) if v not in top_blocked]
    bottoms = [v for v in range(start, stop, -1) if v not in bottom_blocked]
    labels = {v: D[v] for v in bottom_blocked}
    for t, b in zip(tops, bottoms):
        labels[b] = zeta[t]
    return weight_of_diagram(WeightDiagram.build(stop, start, lambda v: labels.get(v, UP), UP, UP), m, n)
