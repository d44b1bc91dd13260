"""Composition factors, Loewy layers and recognition of projective modules.

``R(λ)`` is the image of the trivial module under the projective functor
attached to a crossingless matching ``t``. Its composition factors follow
from stacking cup diagrams under ``t`` and counting closed circles.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb

from .combinatorics import Bipartition, Partition
from .deligne import ModuleSum, summand_of, tensor_decompose
from .diagrams import (
    CIRCLE,
    CROSS,
    DOWN,
    UP,
    WeightDiagram,
    caps_of,
    check_rank,
    cups_of,
    diagram_of_bipartition,
    diagram_of_weight,
    weight_of_diagram,
)
from .errors import NotRecognizable, NotTypical
from .theta import Mode, theta_inverse, _require_cross
from .weights import HighestWeight, symmetric_power, trivial_weight


@dataclass(frozen=True)
class Matching:
    """Cap diagram of λ on the bottom line, cups of the trivial block on top.

    ``lines`` maps bottom vertices to top vertices inside ``[lo, hi]``; outside
    that range every vertex is joined straight up to itself.
    """

    bottom: WeightDiagram
    caps: tuple[tuple[int, int], ...]
    cups: tuple[tuple[int, int], ...]
    lines: tuple[tuple[int, int], ...]
    top_crosses: frozenset[int]
    zeta: WeightDiagram
    lo: int
    hi: int

    @property
    def defect(self) -> int:
        return len(self.caps)

    def bottom_free(self) -> frozenset[int]:
        return frozenset(self.bottom.positions(CROSS, CIRCLE))


@lru_cache(maxsize=None)
def build_matching(la: Bipartition, m: int, n: int) -> Matching:
    la = Bipartition(Partition(la[0]), Partition(la[1]))
    delta = _require_cross(la, m, n)
    D = diagram_of_bipartition(la, delta)
    caps = tuple(caps_of(D))
    k = len(caps) + len(D.positions(CIRCLE))
    cups = tuple((-delta - i + 1, i) for i in range(1, k + 1))
    crosses = frozenset(range(1 - delta, 1))
    zeta = diagram_of_weight(trivial_weight(m, n), m, n)
    top_blocked = set(crosses) | {v for c in cups for v in c}
    bottom_blocked = set(D.positions(CROSS, CIRCLE)) | {v for c in caps for v in c}
    everything = top_blocked | bottom_blocked | {D.lo, D.hi, zeta.lo, zeta.hi}
    lo, hi = min(everything) - 1, max(everything) + 1
    tops = [v for v in range(hi, lo - 1, -1) if v not in top_blocked]
    bottoms = [v for v in range(hi, lo - 1, -1) if v not in bottom_blocked]
    assert len(tops) == len(bottoms) and tops[0] == bottoms[0] and tops[-1] == bottoms[-1]
    lines = tuple(sorted(zip(bottoms, tops)))
    return Matching(D, caps, cups, lines, crosses, zeta, lo, hi)


def _orientations(M: Matching, m: int, n: int) -> list[HighestWeight]:
    """The 2^d bottom labelings α that orient ``t`` consistently against ζ on top."""
    base = {b: M.zeta[t] for b, t in M.lines}
    out = []
    for choice in product((False, True), repeat=len(M.caps)):
        labels = dict(base)
        for (i, j), flipped in zip(M.caps, choice):
            labels[i], labels[j] = (UP, DOWN) if flipped else (DOWN, UP)
        D = WeightDiagram.build(M.lo, M.hi, lambda v: labels.get(v, M.bottom[v]), UP, UP)
        out.append(weight_of_diagram(D, m, n))
    return out


# --------------------------------------------------------------------------
# ρ ⊂ μ


def _oriented_by(cups: list[tuple[int, int]], downs: set[int], target_downs: set[int]) -> bool:
    covered = set()
    for i, j in cups:
        if (i in target_downs) == (j in target_downs):
            return False
        covered.update((i, j))
    return target_downs <= covered


@lru_cache(maxsize=None)
def subweights(mu: HighestWeight, m: int, n: int) -> frozenset[HighestWeight]:
    """All ρ with ``ρ ⊂ μ``: μ arises from ρ by reversing some of ρ's cups."""
    D = diagram_of_weight(mu, m, n)
    downs = D.positions(DOWN)
    r = len(downs)
    free = set(D.positions(CROSS, CIRCLE))
    reach = 2 * r + m + n + 1
    options = []
    for p in downs:
        opts = [p] + [q for q in range(p - reach, p) if q not in free and D[q] == UP]
        options.append(opts)
    target = set(downs)
    found = set()
    for choice in product(*options):
        chosen = set(choice)
        if len(chosen) != r:
            continue
        rho = WeightDiagram.build(D.lo - reach, D.hi, lambda v: DOWN if v in chosen else D[v] if v in free else UP)
        if _oriented_by(cups_of(rho), chosen, target):
            found.add(weight_of_diagram(rho, m, n))
    return frozenset(found)


def _flip_cups(w: HighestWeight, cups: list[tuple[int, int]], m: int, n: int) -> HighestWeight:
    D = diagram_of_weight(w, m, n)
    changes = {}
    for i, j in cups:
        changes[i], changes[j] = UP, DOWN
    return weight_of_diagram(D.with_labels(changes), m, n)


def superweights(w: HighestWeight, m: int, n: int) -> list[HighestWeight]:
    """All μ with ``w ⊂ μ``."""
    cups = cups_of(diagram_of_weight(w, m, n))
    out = []
    for choice in product((False, True), repeat=len(cups)):
        out.append(_flip_cups(w, [c for c, f in zip(cups, choice) if f], m, n))
    return out


# --------------------------------------------------------------------------
# composition factors


@dataclass(frozen=True)
class _Composite:
    reduction_cups: frozenset[tuple[int, int]]
    circles: int
    lower_lines: tuple[tuple[int, int], ...]


def _compose(gamma: WeightDiagram, M: Matching) -> _Composite:
    """Stack the cup diagram of γ under t and read off its components."""
    free = M.bottom_free()
    gcups = cups_of(gamma)
    lo = min([M.lo, gamma.lo, *(i for i, _ in gcups)]) - 1
    hi = max([M.hi, gamma.hi, *(j for _, j in gcups)]) + 1
    adj: dict[tuple[str, int], list[tuple[str, int]]] = defaultdict(list)

    def join(a, b):
        adj[a].append(b)
        adj[b].append(a)

    for i, j in M.caps:
        join(("b", i), ("b", j))
    for i, j in M.cups:
        join(("t", i), ("t", j))
    line_map = dict(M.lines)
    for v in range(lo, hi + 1):
        if v not in free and not any(v in c for c in M.caps):
            join(("b", v), ("t", line_map.get(v, v)))
    in_cup = set()
    for i, j in gcups:
        join(("g", i), ("g", j))
        join(("b", i), ("g", i))
        join(("b", j), ("g", j))
        in_cup.update((i, j))
    for v in range(lo, hi + 1):
        if v not in free and v not in in_cup:
            join(("b", v), ("down", v))

    seen: set = set()
    cups, circles, lower = set(), 0, []
    for start in list(adj):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            node = stack.pop()
            comp.append(node)
            for nb in adj[node]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        tops = sorted(v for kind, v in comp if kind == "t")
        downs = sorted(v for kind, v in comp if kind == "down")
        if len(tops) == 2:
            cups.add((tops[0], tops[1]))
        elif not tops:
            if downs:
                lower.append(tuple(downs))
            else:
                circles += 1
    return _Composite(frozenset(cups), circles, tuple(lower))


@dataclass(frozen=True)
class LayeredFactors:
    """Composition factors by Loewy layer; rows are ``(layer, weight, multiplicity)``."""

    rows: tuple[tuple[int, HighestWeight, int], ...]
    loewy_length: int

    def layer(self, j: int) -> Counter:
        return Counter({w: c for layer, w, c in self.rows if layer == j})

    def multiset(self) -> Counter:
        acc: Counter = Counter()
        for _, w, c in self.rows:
            acc[w] += c
        return acc

    def __str__(self) -> str:
        return "\n".join(f"{layer}\t{w}\t{c}" for layer, w, c in self.rows)


def _graded_factors(la: Bipartition, m: int, n: int) -> tuple[Matching, dict[HighestWeight, int], Counter]:
    M = build_matching(la, m, n)
    alphas = _orientations(M, m, n)
    containing: Counter = Counter()
    for alpha in alphas:
        for gamma in subweights(alpha, m, n):
            containing[gamma] += 1
    zeta_cups = frozenset(cups_of(M.zeta))
    circles = {}
    for gamma in containing:
        comp = _compose(diagram_of_weight(gamma, m, n), M)
        if comp.reduction_cups != zeta_cups:
            continue
        # every lower line must carry one v ray and one ^ ray
        G = diagram_of_weight(gamma, m, n)
        if any(sorted(G[v] for v in ends) != [UP, DOWN] for ends in comp.lower_lines):
            continue
        circles[gamma] = comp.circles
    return M, circles, containing


@lru_cache(maxsize=None)
def comp_factors(la: Bipartition, m: int, n: int) -> LayeredFactors:
    """Composition factors of ``R(λ)`` with Loewy layers 1..2d+1 (layer 1 is the head)."""
    la = Bipartition(Partition(la[0]), Partition(la[1]))
    M, circles, _ = _graded_factors(la, m, n)
    d = M.defect
    acc: Counter = Counter()
    for gamma, c in circles.items():
        for i in range(c + 1):
            acc[(d + 1 - c + 2 * i, gamma)] += comb(c, i)
    rows = sorted(((layer, w, k) for (layer, w), k in acc.items()), key=lambda r: (r[0], [-x for x in r[1].as_list()]))
    return LayeredFactors(tuple(rows), 2 * d + 1)


def ungraded_factor_counts(la: Bipartition, m: int, n: int) -> tuple[Counter, Counter]:
    """``(2^{n_γ}, #{α ⊃ γ})`` per admissible γ; the two counts must agree."""
    _, circles, containing = _graded_factors(Bipartition(Partition(la[0]), Partition(la[1])), m, n)
    return Counter({g: 2**c for g, c in circles.items()}), Counter({g: containing[g] for g in circles})


@lru_cache(maxsize=None)
def projective_factors(w: HighestWeight, m: int, n: int) -> Counter:
    """Composition factors of ``P(w)``: Kac flags ``K(μ)`` for ``μ ⊃ w``, each with factors ``ρ ⊂ μ``."""
    check_rank(m, n)
    acc: Counter = Counter()
    for mu in superweights(w, m, n):
        for rho in subweights(mu, m, n):
            acc[rho] += 1
    return acc


def _down_key(w: HighestWeight, m: int, n: int) -> tuple[int, ...]:
    return tuple(sorted(diagram_of_weight(w, m, n).positions(DOWN), reverse=True))


def projective_of_top(a: HighestWeight, m: int, n: int) -> HighestWeight:
    """The w whose projective cover has highest factor ``a`` (w with every cup reversed equals a)."""
    for w in subweights(a, m, n):
        if _flip_cups(w, cups_of(diagram_of_weight(w, m, n)), m, n) == a:
            return w
    raise NotRecognizable(f"{a} is not the top factor of a projective module")


def k0_recognize(factors, m: int, n: int) -> Counter:
    """Split a K₀ class of a projective module into projective covers ``{w: multiplicity}``."""
    left = Counter(factors)
    if any(c < 0 for c in left.values()):
        raise NotRecognizable("negative multiplicities")
    result: Counter = Counter()
    while +left:
        left = +left
        top = max(left, key=lambda w: (_down_key(w, m, n), w.as_list()))
        w = projective_of_top(top, m, n)
        times = left[top]
        for f, c in projective_factors(w, m, n).items():
            left[f] -= times * c
            if left[f] < 0:
                raise NotRecognizable(f"class is not a sum of projective modules (at {f})")
        result[w] += times
    return result


def projective_sum(counts: Counter, m: int, n: int, twist: int = 0) -> ModuleSum:
    terms: dict = {}
    for w, c in counts.items():
        la = theta_inverse(w, Mode.PROJECTIVE_COVER, m, n)
        terms[summand_of(la, m, n)] = c
    return ModuleSum.from_counts(terms, m, n, twist)


# --------------------------------------------------------------------------
# typical ⊗ symmetric powers


def _is_typical(w: HighestWeight, m: int, n: int) -> bool:
    return not diagram_of_weight(w, m, n).positions(DOWN)


def _sym_power_degree(w: HighestWeight, n: int) -> int | None:
    for i in range(0, sum(abs(x) for x in w.as_list()) + 1):
        if symmetric_power(i, n) == w:
            return i
    return None


def typical_times_S(v: HighestWeight, i: int, n: int, twist: int = 0) -> ModuleSum:
    """``L(v) ⊗ Ber^twist ⊗ S^i`` in Gl(n|n) for typical v, as a sum of projectives."""
    m = n
    check_rank(m, n)
    v.check_dominant(m, n)
    if not _is_typical(v, m, n):
        raise NotTypical(f"{v} is not typical")
    memo: dict[int, Counter] = {}

    def times_factor(f: HighestWeight) -> Counter:
        # L(v) ⊗ L(f) as a K₀ class, for f a Berezin power or a symmetric power
        a = f.even[0] if f.even else 0
        if f == HighestWeight((a,) * n, (-a,) * n):
            return Counter({v.shift(a): 1})
        j = _sym_power_degree(f, n)
        if j is None:
            raise NotRecognizable(f"unexpected composition factor {f}")
        return times_sym(j)

    def times_sym(j: int) -> Counter:
        if j in memo:
            return memo[j]
        if j == 0:
            memo[0] = Counter({v: 1})
            return memo[0]
        base = theta_inverse(v, Mode.IRREDUCIBLE, m, n)
        total: Counter = Counter()
        for s, c in tensor_decompose(base, Bipartition(Partition((j,)), Partition((1,) * j)), m, n).terms:
            for f, k in projective_factors(s.weight, m, n).items():
                total[f] += c * k
        target = symmetric_power(j, n)
        for f, c in comp_factors(Bipartition(Partition((j,)), Partition((1,) * j)), m, n).multiset().items():
            if f == target:
                if c != 1:
                    raise NotRecognizable(f"S^{j} occurs {c} times")
                continue
            for g, k in times_factor(f).items():
                total[g] -= c * k
        if any(c < 0 for c in total.values()):
            raise NotRecognizable("negative remainder while peeling composition factors")
        memo[j] = +total
        return memo[j]

    if i == 0:
        classes = Counter({v: 1})
    else:
        classes = times_sym(i)
    counts = k0_recognize(classes, m, n)
    counts = Counter({w.shift(twist): c for w, c in counts.items()})
    return projective_sum(counts, m, n)
