"""Grothendieck-ring computations for mixed tensors.

Products are formed in the generic ring through Γ coefficients, then pulled
back to Gl(m|n) with the unitriangular ``lift`` at δ = m − n.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import prod

from .combinatorics import (
    EMPTY,
    Bipartition,
    Partition,
    RingElement,
    covariant_dim,
    hook_character,
    lr_product,
    lr_skew,
    subpartitions,
)
from .diagrams import (
    bipartition_of_diagram,
    caps_of,
    check_rank,
    diagram_of_bipartition,
    invariants_of,
    is_cross,
    swap_pairs,
)
from .errors import NotCross
from .theta import theta
from .weights import HighestWeight


def _bip(la) -> Bipartition:
    return Bipartition(Partition(la[0]), Partition(la[1]))


# --------------------------------------------------------------------------
# lift


@lru_cache(maxsize=None)
def _lift_terms(la: Bipartition, delta: int) -> tuple[Bipartition, ...]:
    D = diagram_of_bipartition(la, delta)
    caps = caps_of(D)
    terms = []
    for r in range(len(caps) + 1):
        for chosen in combinations(caps, r):
            terms.append(bipartition_of_diagram(swap_pairs(D, chosen), delta))
    return tuple(terms)


def lift(la: Bipartition | RingElement, delta: int) -> RingElement:
    """``lift_δ``: λ maps to the sum over all ways of reversing a subset of its caps."""
    if isinstance(la, RingElement):
        acc = RingElement()
        for key, c in la.items():
            acc = acc + c * lift(key, delta)
        return acc
    return RingElement(Counter(_lift_terms(_bip(la), delta)))


@lru_cache(maxsize=None)
def _lift_inverse_basis(la: Bipartition, delta: int) -> RingElement:
    result = RingElement.basis(la)
    for mu in _lift_terms(la, delta):
        if mu != la:
            result = result - _lift_inverse_basis(mu, delta)
    return result


def lift_inverse(x: RingElement | Bipartition, delta: int) -> RingElement:
    if not isinstance(x, RingElement):
        return _lift_inverse_basis(_bip(x), delta)
    acc = RingElement()
    for key, c in x.items():
        acc = acc + c * _lift_inverse_basis(key, delta)
    return acc


# --------------------------------------------------------------------------
# generic product


def _common(a: Partition, b: Partition) -> Partition:
    return Partition(min(a.part(i), b.part(i)) for i in range(1, min(len(a), len(b)) + 1))


@lru_cache(maxsize=None)
def _gamma_product(la: Bipartition, mu: Bipartition) -> RingElement:
    acc: Counter = Counter()
    for kappa in subpartitions(_common(la.left, mu.right)):
        alphas = lr_skew(la.left, kappa)
        betas = lr_skew(mu.right, kappa)
        for gamma in subpartitions(_common(la.right, mu.left)):
            etas = lr_skew(la.right, gamma)
            thetas = lr_skew(mu.left, gamma)
            for alpha, ca in alphas.items():
                for th, ct in thetas.items():
                    lefts = lr_product(alpha, th)
                    for beta, cb in betas.items():
                        for eta, ce in etas.items():
                            weight = ca * ct * cb * ce
                            rights = lr_product(beta, eta)
                            for nl, cl in lefts.items():
                                for nr, cr in rights.items():
                                    acc[Bipartition(nl, nr)] += weight * cl * cr
    return RingElement(acc)


def gamma_product(x: RingElement | Bipartition, y: RingElement | Bipartition) -> RingElement:
    """Product in the generic Deligne ring."""
    xs = x.items() if isinstance(x, RingElement) else [(_bip(x), 1)]
    ys = y.items() if isinstance(y, RingElement) else [(_bip(y), 1)]
    acc = RingElement()
    for a, ca in xs:
        for b, cb in ys:
            acc = acc + (ca * cb) * _gamma_product(a, b)
    return acc


def gamma_coeff(la: Bipartition, mu: Bipartition, nu: Bipartition) -> int:
    """Γ^ν_{λμ}."""
    return _gamma_product(_bip(la), _bip(mu)).get(_bip(nu), 0)


# --------------------------------------------------------------------------
# decompositions


@dataclass(frozen=True, order=True)
class Summand:
    """``L(w)``, ``P(w)`` or ``R(λ)``; ``w`` is always θ(λ)."""

    kind: str
    weight: HighestWeight
    bipartition: Bipartition

    def label(self) -> str:
        if self.kind == "R":
            return f"R{self.bipartition}"
        return f"{self.kind}{self.weight}"


def summand_of(la: Bipartition, m: int, n: int) -> Summand:
    inv = invariants_of(la, m, n)
    kind = "L" if inv.d == 0 else "P" if inv.k == n else "R"
    return Summand(kind, theta(la, m, n), la)


@dataclass(frozen=True)
class ModuleSum:
    terms: tuple[tuple[Summand, int], ...] = ()
    berezin_twist: int = 0
    m: int = 0
    n: int = 0

    @classmethod
    def from_counts(cls, counts: dict[Summand, int], m: int, n: int, twist: int = 0) -> "ModuleSum":
        items = [(s, c) for s, c in counts.items() if c]
        items.sort(key=lambda sc: (-sc[0].bipartition.size, sc[0].bipartition, sc[0].weight.as_list()))
        return cls(tuple(items), twist, m, n)

    def as_dict(self) -> dict[Summand, int]:
        return dict(self.terms)

    def labels(self) -> dict[str, int]:
        return {s.label(): c for s, c in self.terms}

    def weights(self) -> Counter:
        return Counter({s.weight: c for s, c in self.terms})

    def bipartitions(self) -> RingElement:
        return RingElement({s.bipartition: c for s, c in self.terms})

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        body = " ⊕ ".join(s.label() if c == 1 else f"{c}*{s.label()}" for s, c in self.terms) or "0"
        return f"Ber^{self.berezin_twist} ⊗ ({body})" if self.berezin_twist else body


def ring_to_modules(x: RingElement, m: int, n: int) -> ModuleSum:
    """Classify the cross terms of ``x``; negative multiplicities on them are a bug."""
    counts: dict[Summand, int] = {}
    for la, c in x.items():
        if not is_cross(la, m, n):
            continue
        if c < 0:
            raise ArithmeticError(f"negative multiplicity {c} for {la}")
        counts[summand_of(la, m, n)] = c
    return ModuleSum.from_counts(counts, m, n)


@lru_cache(maxsize=None)
def _tensor_ring(la: Bipartition, mu: Bipartition, delta: int) -> RingElement:
    return lift_inverse(gamma_product(lift(la, delta), lift(mu, delta)), delta)


def tensor_ring(la: Bipartition, mu: Bipartition, m: int, n: int) -> RingElement:
    """``R(λ) ⊗ R(μ)`` as a combination of bipartitions (non-cross terms removed)."""
    delta = check_rank(m, n)
    la, mu = _bip(la), _bip(mu)
    for x in (la, mu):
        if not is_cross(x, m, n):
            raise NotCross(f"{x} is not ({m}|{n})-cross")
    raw = _tensor_ring(la, mu, delta)
    return RingElement({k: v for k, v in raw.items() if is_cross(k, m, n)})


def tensor_decompose(la: Bipartition, mu: Bipartition, m: int, n: int) -> ModuleSum:
    return ring_to_modules(tensor_ring(la, mu, m, n), m, n)


def special_product(left: Partition, right: Partition, m: int, n: int) -> ModuleSum:
    """Decomposition of ``{λ^L} ⊗ {λ^R}^∨``."""
    return tensor_decompose(Bipartition(Partition(left), EMPTY), Bipartition(EMPTY, Partition(right)), m, n)


def decompose_T(r: int, s: int, m: int, n: int) -> ModuleSum:
    """Indecomposable summands of ``V^{⊗r} ⊗ (V^∨)^{⊗s}``."""
    check_rank(m, n)
    x = RingElement.basis(Bipartition(EMPTY, EMPTY))
    factors = [Bipartition(Partition((1,)), EMPTY)] * r + [Bipartition(EMPTY, Partition((1,)))] * s
    for f in factors:
        acc = RingElement()
        for la, c in x.items():
            acc = acc + c * tensor_ring(la, f, m, n)
        x = acc
    return ring_to_modules(x, m, n)


def ds_image(la: Bipartition, m: int, n: int, r: int) -> Bipartition | None:
    """Image under the rank-r Duflo–Serganova functor; ``None`` stands for zero."""
    la = _bip(la)
    if not 1 <= r <= n:
        raise ValueError(f"rank r must lie in 1..{n}")
    inv = invariants_of(la, m, n)
    if not inv.is_cross:
        raise NotCross(f"{la} is not ({m}|{n})-cross")
    return None if inv.k > n - r else la


# --------------------------------------------------------------------------
# dimensions


def gl_weight(la: Bipartition, d: int) -> tuple[int, ...]:
    """``wt(λ)``: λ^L padded with zeros, followed by the negated reversed λ^R."""
    la = _bip(la)
    if len(la.left) + len(la.right) > d:
        raise ValueError(f"{la} has more than {d} parts")
    middle = d - len(la.left) - len(la.right)
    return tuple(la.left) + (0,) * middle + tuple(-x for x in reversed(la.right))


def weyl_dim(wt: tuple[int, ...]) -> int:
    d = len(wt)
    num = prod(wt[i] - wt[j] + j - i for i in range(d) for j in range(i + 1, d))
    den = prod(j - i for i in range(d) for j in range(i + 1, d))
    return num // den


def superdim(la: Bipartition, m: int, n: int) -> int:
    la = _bip(la)
    delta = check_rank(m, n)
    if not is_cross(la, m, n):
        raise NotCross(f"{la} is not ({m}|{n})-cross")
    if la.length > delta:
        return 0
    return weyl_dim(gl_weight(la, delta))


@lru_cache(maxsize=None)
def _dim_mixed(la: Bipartition, m: int, n: int) -> int:
    if not la.right or not la.left:
        return covariant_dim(la.left or la.right, m, n)
    total = covariant_dim(la.left, m, n) * covariant_dim(la.right, m, n)
    for nu, c in tensor_ring(Bipartition(la.left, EMPTY), Bipartition(EMPTY, la.right), m, n).items():
        if nu != la:
            total -= c * _dim_mixed(nu, m, n)
    return total


def dim_mixed(la: Bipartition, m: int, n: int) -> int:
    la = _bip(la)
    check_rank(m, n)
    if not is_cross(la, m, n):
        raise NotCross(f"{la} is not ({m}|{n})-cross")
    return _dim_mixed(la, m, n)


Laurent = dict[tuple[int, ...], int]


def _laurent_mul(a: Laurent, b: Laurent) -> Laurent:
    acc: Counter = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            acc[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {k: v for k, v in acc.items() if v}


def _laurent_sub(a: Laurent, b: Laurent, scale: int = 1) -> Laurent:
    acc = Counter(a)
    for k, v in b.items():
        acc[k] -= scale * v
    return {k: v for k, v in acc.items() if v}


@lru_cache(maxsize=None)
def _character(la: Bipartition, m: int, n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    left = hook_character(la.left, m, n)
    right = {tuple(-x for x in k): v for k, v in hook_character(la.right, m, n).items()}
    result = _laurent_mul(left, right)
    if la.left and la.right:
        for nu, c in tensor_ring(Bipartition(la.left, EMPTY), Bipartition(EMPTY, la.right), m, n).items():
            if nu != la:
                result = _laurent_sub(result, dict(_character(nu, m, n)), c)
    return tuple(sorted(result.items()))


def character_mixed(la: Bipartition, m: int, n: int) -> Laurent:
    """Character as ``{(x_1..x_m, y_1..y_n) exponents: coefficient}``."""
    la = _bip(la)
    check_rank(m, n)
    if not is_cross(la, m, n):
        raise NotCross(f"{la} is not ({m}|{n})-cross")
    return dict(_character(la, m, n))
