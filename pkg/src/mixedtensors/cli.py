"""Command-line interface.

Exit status: 0 on success, 2 when an argument does not parse, 3 when the
input is well formed but outside the domain of the operation (the error
class name is printed on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Sequence

from . import deligne, diagrams, structure
from .theta import Mode, a_weight, classify, dual_irreducible, kostant_normalize, theta, theta_inverse
from .combinatorics import Bipartition, parse_bipartition
from .deligne import ModuleSum
from .errors import MixedTensorError, ParseError
from .weights import HighestWeight, parse_weight


def _weight_json(w: HighestWeight) -> list[int]:
    return w.as_list()


def _bip_json(la: Bipartition) -> list[list[int]]:
    return [list(la.left), list(la.right)]


def module_sum_json(s: ModuleSum) -> dict:
    return {
        "summands": [
            {"kind": t.kind, "weight": _weight_json(t.weight), "bipartition": _bip_json(t.bipartition), "mult": c}
            for t, c in s.terms
        ],
        "berezin": s.berezin_twist,
        "m": s.m,
        "n": s.n,
    }


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _emit_sum(args, s: ModuleSum) -> None:
    _emit(args, str(s), module_sum_json(s))


def _is_weight(text: str, m: int, n: int) -> bool:
    """Heuristic for the ``diagram`` command: exact (m|n) entry counts mean a weight."""
    try:
        w = parse_weight(text)
    except ParseError:
        return False
    return (w.m, w.n) == (m, n) and "^" not in text


# --------------------------------------------------------------------------
# commands


def cmd_diagram(args) -> None:
    m, n = args.m, args.n
    as_weight = args.kind == "weight" or (args.kind is None and _is_weight(args.item, m, n))
    if as_weight:
        w = parse_weight(args.item)
        D = diagrams.diagram_of_weight(w, m, n)
        cups = diagrams.cups_of(D)
        info = {"kind": "weight", "weight": _weight_json(w), "cups": [list(c) for c in cups],
                "atypicality": len(cups), "kostant": diagrams.is_kostant(w, m, n)}
        text = f"{D.render()}\ncups: {cups}\natypicality: {len(cups)}  kostant: {info['kostant']}"
    else:
        la = parse_bipartition(args.item)
        delta = diagrams.check_rank(m, n)
        D = diagrams.diagram_of_bipartition(la, delta)
        inv = diagrams.invariants_of(la, m, n)
        caps = diagrams.caps_of(D)
        info = {"kind": "bipartition", "bipartition": _bip_json(la), "caps": [list(c) for c in caps],
                "d": inv.d, "rk": inv.rk, "k": inv.k, "atyp": inv.atyp, "cross": inv.is_cross}
        text = (f"{D.render()}\ncaps: {caps}\n"
                f"d={inv.d} rk={inv.rk} k={inv.k} atyp={inv.atyp} cross={inv.is_cross}")
    _emit(args, text, info)


def cmd_theta(args) -> None:
    w = theta(parse_bipartition(args.bipartition), args.m, args.n)
    _emit(args, f"L{w}", {"weight": _weight_json(w)})


def cmd_a_weight(args) -> None:
    w = a_weight(parse_bipartition(args.bipartition), args.m, args.n)
    _emit(args, f"L{w}", {"weight": _weight_json(w)})


def cmd_classify(args) -> None:
    c = classify(parse_bipartition(args.bipartition), args.m, args.n)
    text = f"{c.kind.value}  loewy_length={c.loewy_length}  socle=L{c.socle}  atyp={c.atyp}  d={c.d}  k={c.k}"
    _emit(args, text, {"kind": c.kind.value, "loewy_length": c.loewy_length, "socle": _weight_json(c.socle),
                       "atyp": c.atyp, "d": c.d, "k": c.k})


def cmd_inverse(args) -> None:
    la = theta_inverse(parse_weight(args.weight), Mode(args.mode), args.m, args.n)
    _emit(args, f"R{la}", {"bipartition": _bip_json(la)})


def _operand(text: str, how: str, m: int, n: int) -> tuple[int, Bipartition]:
    if how == "bipartition":
        return 0, parse_bipartition(text)
    w = parse_weight(text)
    if how == "weight":
        return kostant_normalize(w, m, n)
    return 0, theta_inverse(w, Mode.PROJECTIVE_COVER, m, n)


def cmd_tensor(args) -> None:
    how = "proj-weight" if args.kind == "proj-weights" else args.kind
    r1, a = _operand(args.left, how, args.m, args.n)
    r2, b = _operand(args.right, how, args.m, args.n)
    s = deligne.tensor_decompose(a, b, args.m, args.n)
    _emit_sum(args, ModuleSum(s.terms, -(r1 + r2), s.m, s.n))


def cmd_lift(args) -> None:
    delta = diagrams.check_rank(args.m, args.n)
    x = deligne.lift(parse_bipartition(args.bipartition), delta)
    terms = x.sorted_terms()
    _emit(args, " + ".join(str(b) if c == 1 else f"{c}*{b}" for b, c in terms),
          {"terms": [{"bipartition": _bip_json(b), "coeff": c} for b, c in terms]})


def cmd_dims(args) -> None:
    la = parse_bipartition(args.bipartition)
    dim, sdim = deligne.dim_mixed(la, args.m, args.n), deligne.superdim(la, args.m, args.n)
    _emit(args, f"dim={dim} sdim={sdim}", {"dim": dim, "sdim": sdim})


def cmd_sdim(args) -> None:
    sdim = deligne.superdim(parse_bipartition(args.bipartition), args.m, args.n)
    _emit(args, str(sdim), {"sdim": sdim})


def cmd_dual(args) -> None:
    w = dual_irreducible(parse_weight(args.weight), args.m, args.n)
    _emit(args, f"L{w}", {"weight": _weight_json(w)})


def cmd_kostant(args) -> None:
    r, la = kostant_normalize(parse_weight(args.weight), args.m, args.n)
    _emit(args, f"Ber^{r} ⊗ L{parse_weight(args.weight)} = R{la}", {"berezin": r, "bipartition": _bip_json(la)})


def cmd_factors(args) -> None:
    lf = structure.comp_factors(parse_bipartition(args.bipartition), args.m, args.n)
    text = "layer\tweight\tmult\n" + str(lf)
    _emit(args, text, {"loewy_length": lf.loewy_length,
                       "rows": [{"layer": l, "weight": _weight_json(w), "mult": c} for l, w, c in lf.rows]})


def _read_factors(stream) -> Counter:
    """One factor per line: a weight, optionally followed by a multiplicity."""
    acc: Counter = Counter()
    for raw in stream:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, tail = line.rpartition(")")
        w = parse_weight(head + ")")
        try:
            mult = int(tail.strip() or 1)
        except ValueError as exc:
            raise ParseError(f"bad multiplicity in {raw!r}") from exc
        acc[w] += mult
    return acc


def cmd_k0(args) -> None:
    counts = structure.k0_recognize(_read_factors(sys.stdin), args.m, args.n)
    _emit_sum(args, structure.projective_sum(counts, args.m, args.n))


def cmd_decompose_T(args) -> None:
    _emit_sum(args, deligne.decompose_T(args.r, args.s, args.m, args.n))


def cmd_typical_times_s(args) -> None:
    if args.m != args.n:
        raise ParseError("typical-times-s needs m == n")
    _emit_sum(args, structure.typical_times_S(parse_weight(args.weight), args.i, args.n, args.twist))


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, required=True)
    common.add_argument("--n", type=int, required=True)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="mixedtensors", description="Mixed tensor combinatorics for Gl(m|n).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *positionals, help=None):
        p = sub.add_parser(name, parents=[common], help=help)
        for pos in positionals:
            p.add_argument(pos)
        p.set_defaults(func=func)
        return p

    p = add("diagram", cmd_diagram, "item", help="weight diagram of a weight or bipartition")
    p.add_argument("--as", dest="kind", choices=("weight", "bipartition"))
    add("theta", cmd_theta, "bipartition", help="socle weight of R(λ)")
    add("a-weight", cmd_a_weight, "bipartition", help="highest-weight constituent of R(λ)")
    add("classify", cmd_classify, "bipartition", help="irreducible / projective / Loewy length")
    p = add("inverse", cmd_inverse, "weight", help="preimage of a weight under theta")
    p.add_argument("--mode", choices=[mo.value for mo in Mode], default=Mode.PROJECTIVE_COVER.value)
    p = add("tensor", cmd_tensor, "left", "right", help="decompose a tensor product")
    p.add_argument("--as", dest="kind", choices=("bipartition", "weight", "proj-weight", "proj-weights"),
                   default="bipartition")
    add("lift", cmd_lift, "bipartition", help="lift to the generic Deligne ring")
    add("dims", cmd_dims, "bipartition", help="dimension and superdimension")
    add("sdim", cmd_sdim, "bipartition", help="superdimension")
    add("dual", cmd_dual, "weight", help="highest weight of the dual irreducible")
    add("kostant-normalize", cmd_kostant, "weight", help="Berezin twist to an irreducible mixed tensor")
    add("factors", cmd_factors, "bipartition", help="composition factors by Loewy layer")
    add("k0-recognize", cmd_k0, help="projective summands from factors on stdin")
    p = add("decompose-T", cmd_decompose_T, help="summands of V^r ⊗ (V*)^s")
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p = add("typical-times-s", cmd_typical_times_s, "weight", help="L(v) ⊗ S^i for typical v (m = n)")
    p.add_argument("i", type=int)
    p.add_argument("--twist", type=int, default=0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return 2
    except MixedTensorError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
