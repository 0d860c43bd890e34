"""Command-line front end.

JSON goes to standard output and a short human summary to standard error.
Exit status: 0 on success, 1 when a check fails, 2 on a usage error.

Adjoint basis order (0-based indices, used by ``--show`` and in every
matrix): v[alpha_1], v[-alpha_1], v[alpha_2], v[-alpha_2], ...,
v[alpha_m], v[-alpha_m], V[h1], ..., V[hl], where alpha_1, ..., alpha_m are
the positive roots ordered by height and then by coordinates, descending.
Matrix JSON: {"ring": <descriptor>, "rank": l, "rows": [[literal, ...], ...]}.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .rings import RingContext, RingError, ring_from_descriptor
from .roots import RootError, RootSystem

DEFAULT_SEED = 20240101


class UsageError(Exception):
    pass


def _emit(data) -> None:
    json.dump(data, sys.stdout, indent=1)
    sys.stdout.write("\n")


def _say(*lines: str) -> None:
    for line in lines:
        print(line, file=sys.stderr)


def _ring(args) -> RingContext:
    if args.ring is None:
        raise UsageError("--ring is required")
    try:
        return ring_from_descriptor(args.ring)
    except (RingError, ValueError) as exc:
        raise UsageError(f"--ring: {exc}") from None


def _rank(args) -> RootSystem:
    if args.rank < 2:
        raise UsageError(f"--rank: B_l needs l >= 2, got {args.rank}")
    return RootSystem(args.rank)


def _root(rs: RootSystem, text: str, flag: str = "--root"):
    try:
        return rs.root(text)
    except (RootError, ValueError) as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _value(ctx: RingContext, text: str, flag: str):
    try:
        return ctx.parse(str(text))
    except (RingError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _read_json(text: str, flag: str):
    """Inline JSON, ``@path`` or ``-`` for standard input."""
    try:
        if text == "-":
            text = sys.stdin.read()
        elif text.startswith("@"):
            with open(text[1:]) as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"{flag}: {exc}") from None


def matrix_json(ctx: RingContext, rank: int, m) -> dict:
    return {"ring": ctx.descriptor(), "rank": rank, "rows": m.to_literals()}


def matrix_from_json(data: dict, ctx: RingContext | None = None):
    from .matrices import Matrix

    ctx = ctx or ring_from_descriptor(data["ring"])
    return ctx, int(data["rank"]), Matrix.from_entries(ctx, [[ctx.parse(str(x)) for x in row]
                                                              for row in data["rows"]])


# --- subcommands ----------------------------------------------------------------

def cmd_roots(args) -> int:
    rs = _rank(args)
    out = []
    for k, r in enumerate(rs.positive, start=1):
        for sign in (1, -1):
            root = r if sign == 1 else -r
            out.append({"index": sign * k, "root": str(root), "coords": list(root.coords),
                        "length": "long" if root.is_long else "short", "height": rs.height(root)})
    _emit(out)
    _say(f"B{rs.rank}: {len(out)} roots, m = {rs.m}, n = {rs.n}")
    return 0


def cmd_gens(args) -> int:
    from .group import h_elem, w_elem, x_elem
    from .lie import ad_matrix

    rs = _rank(args)
    alpha = _root(rs, args.root)
    if args.what == "ad":
        rows = [[int(x) for x in row] for row in ad_matrix(rs, alpha)]
        _emit({"ring": None, "rank": rs.rank, "rows": rows})
        _say(f"ad x_{{{alpha}}} in the calibrated basis")
        return 0
    ctx = _ring(args)
    t = _value(ctx, args.param, "--param")
    make = {"x": x_elem, "w": w_elem, "h": h_elem}[args.what]
    try:
        g = make(rs, alpha, t)
    except RingError as exc:
        raise UsageError(f"--param: {exc}") from None
    _emit(matrix_json(ctx, rs.rank, g.matrix))
    _say(f"{args.what}_{{{alpha}}}({ctx.format(t)}) over {ctx!r}")
    return 0


def _steinberg(rs: RootSystem, ctx: RingContext, rng: random.Random, samples: int) -> dict[str, list[str]]:
    from .group import TorusCharacter, mul, x_elem
    from .relations import check_commutator, check_torus_conjugation

    bad: dict[str, list[str]] = {"additivity": [], "torus": [], "commutator": []}
    roots = rs.roots
    pairs = [(a, b) for a in roots for b in roots if a != b and a != -b]
    for k in range(samples):
        a = roots[rng.randrange(len(roots))]
        t, u = ctx.random(rng), ctx.random(rng)
        if mul(x_elem(rs, a, t), x_elem(rs, a, u)) != x_elem(rs, a, t + u):
            bad["additivity"].append(f"{a}: {t}, {u}")
        chi = TorusCharacter(rs, [ctx.random_unit(rng) for _ in range(rs.rank)])
        if not check_torus_conjugation(chi, a, t):
            bad["torus"].append(f"{a}: {chi!r}, {t}")
        p, q = pairs[rng.randrange(len(pairs))]
        if not check_commutator(rs, p, q, t, u):
            bad["commutator"].append(f"({p}, {q}): {t}, {u}")
    return bad


def _weyl(rs: RootSystem, ctx: RingContext, rng: random.Random, samples: int) -> dict[str, list[str]]:
    from .relations import check_weyl_conjugation

    bad: list[str] = []
    roots = rs.roots
    for _ in range(samples):
        a, b = roots[rng.randrange(len(roots))], roots[rng.randrange(len(roots))]
        t = ctx.random(rng)
        if not check_weyl_conjugation(rs, a, b, t):
            bad.append(f"w_{{{a}}} on x_{{{b}}}({t})")
    return {"weyl": bad}


def cmd_verify(args) -> int:
    from .relations import check_con_suite

    rs = _rank(args)
    ctx = _ring(args)
    rng = random.Random(args.seed)
    suites = ["steinberg", "weyl", "con"] if args.suite == "all" else [args.suite]
    if "con" in suites and rs.rank != 3:
        if args.suite == "con":
            raise UsageError("--suite con is stated for rank 3 only")
        suites.remove("con")
    table: dict[str, dict] = {}
    for s in suites:
        if s == "steinberg":
            for name, bad in _steinberg(rs, ctx, rng, args.samples).items():
                table[name] = {"pass": not bad, "failures": bad[:10]}
        elif s == "weyl":
            for name, bad in _weyl(rs, ctx, rng, args.samples).items():
                table[name] = {"pass": not bad, "failures": bad[:10]}
        else:
            rep = check_con_suite(ctx)
            for name, ok in rep.results.items():
                table[name] = {"pass": ok, "failures": [] if ok else [f"{name} fails"]}
    ok = all(v["pass"] for v in table.values())
    _emit({"rank": rs.rank, "ring": ctx.descriptor(), "seed": args.seed, "samples": args.samples,
           "results": table, "passed": sum(v["pass"] for v in table.values()),
           "failed": sum(not v["pass"] for v in table.values())})
    _say(*(f"{'PASS' if v['pass'] else 'FAIL'}  {k}" for k, v in table.items()))
    return 0 if ok else 1


def cmd_compose(args) -> int:
    from .radical import RadicalCoefficients, compose

    rs = _rank(args)
    ctx = _ring(args)
    if args.coeffs == "random":
        c = RadicalCoefficients.random(rs, ctx, random.Random(args.seed))
    else:
        try:
            c = RadicalCoefficients.from_json(ctx, _read_json(args.coeffs, "--coeffs"))
        except (KeyError, RingError, ValueError) as exc:
            raise UsageError(f"--coeffs: {exc}") from None
    try:
        m = compose(rs, c)
    except ValueError as exc:
        raise UsageError(f"--coeffs: {exc}") from None
    out = matrix_json(ctx, rs.rank, m)
    out["coeffs"] = c.to_json()
    _emit(out)
    _say(f"composed over {ctx!r}, n = {rs.n}")
    return 0


def cmd_reconstruct(args) -> int:
    from .radical import NotRadicalCongruent, UnsupportedRing, reconstruct

    data = _read_json(args.matrix, "--matrix")
    ctx = _ring(args) if args.ring is not None else None
    try:
        ctx, rank, m = matrix_from_json(data, ctx)
    except (KeyError, RingError, ValueError) as exc:
        raise UsageError(f"--matrix: {exc}") from None
    if args.rank is not None and args.rank != rank:
        raise UsageError(f"--rank {args.rank} does not match the matrix rank {rank}")
    rs = RootSystem(rank)
    try:
        c = reconstruct(m, rs)
    except (NotRadicalCongruent, UnsupportedRing) as exc:
        _say(f"not reconstructible: {exc}")
        _emit({"error": str(exc)})
        return 1
    _emit(c.to_json())
    _say(f"reconstructed {1 + rs.rank + 2 * rs.m} coefficients")
    return 0


def _index(rs: RootSystem, text: str) -> int:
    from .lie import BasisIndex

    text = text.strip()
    if text.lstrip("-").isdigit():
        k = int(text)
        if not 0 <= k < rs.n:
            raise UsageError(f"--show: index {k} out of range 0..{rs.n - 1}")
        return k
    try:
        return BasisIndex(rs).index(text)
    except (RootError, ValueError, IndexError) as exc:
        raise UsageError(f"--show: {exc}") from None


def cmd_matrix_units(args) -> int:
    from .lie import BasisIndex
    from .matrix_units import CertificationError, generate_all, h_block_combination

    rs = _rank(args)
    ctx = _ring(args)
    try:
        table = generate_all(rs, ctx)
    except ValueError as exc:
        raise UsageError(f"--ring: {exc}") from None
    except CertificationError as exc:
        _emit({"error": str(exc)})
        return 1
    bi = BasisIndex(rs)
    if args.show:
        parts = args.show.split(";") if ";" in args.show else args.show.split(",")
        if len(parts) != 2:
            raise UsageError("--show takes i,j (indices or labels; use ';' between labels with commas)")
        i, j = (_index(rs, p) for p in parts)
        _emit({"row": bi.label(i), "col": bi.label(j), "recipe": table.describe(i, j)})
        _say(table.describe(i, j))
        return 0
    failures = table.certify_all()
    report = h_block_combination(rs, ctx, table)
    checks = report.checks()
    out = {"rank": rs.rank, "ring": ctx.descriptor(), "units": len(table), "expected": rs.n ** 2,
           "complete": table.complete(), "failures": [list(f) for f in failures],
           "printed_intermediates": checks}
    _emit(out)
    _say(f"{len(table)} / {rs.n ** 2} units certified",
         *(f"{'PASS' if v else 'FAIL'}  {k}" for k, v in checks.items()))
    return 0 if table.complete() and not failures else 1


def _parse_word(rs: RootSystem, ctx: RingContext, text: str, flag: str):
    """``x:e1-e2:1,w:e3:1`` style word of x, w, h factors."""
    from .group import GroupElement, h_elem, mul, w_elem, x_elem

    g = GroupElement.identity(rs, ctx)
    make = {"x": x_elem, "w": w_elem, "h": h_elem}
    for part in text.split(","):
        bits = part.split(":")
        if len(bits) != 3 or bits[0] not in make:
            raise UsageError(f"{flag}: expected kind:root:param, got {part!r}")
        try:
            g = mul(g, make[bits[0]](rs, _root(rs, bits[1], flag), _value(ctx, bits[2], flag)))
        except RingError as exc:
            raise UsageError(f"{flag}: {exc}") from None
    return g


def cmd_aut(args) -> int:
    from .automorphisms import NotNormalizing, apply, check_lift, inner_aut, lift_torus, ring_aut
    from .group import x_elem

    rs = _rank(args)
    ctx = _ring(args)
    target = _parse_word(rs, ctx, args.target, "--target")
    if args.kind == "ring":
        u = _value(ctx.base, args.u, "--u") if args.sigma == "dual-scale" else None
        try:
            a = ring_aut(args.sigma, u)
            after = apply(a, target)
        except RingError as exc:
            raise UsageError(f"--sigma: {exc}") from None
        summary = f"ring automorphism {args.sigma}"
    elif args.kind == "inner":
        if not args.by:
            raise UsageError("--by is required for --kind inner")
        g = _parse_word(rs, ctx, args.by, "--by")
        try:
            after = apply(inner_aut(g), target)
        except NotNormalizing as exc:
            _say(f"rejected: {exc}")
            _emit({"error": str(exc)})
            return 1
        summary = f"conjugation by {args.by}"
    else:
        kind = args.lift_kind if args.lift_kind is not None else 1
        r = _value(ctx, args.r, "--r")
        try:
            S, t = lift_torus(rs, kind, r)
        except (RingError, ValueError) as exc:
            raise UsageError(f"--r/--lift-kind: {exc}") from None
        from .automorphisms import _conjugate_into

        after = _conjugate_into(t, target)
        xis = [ctx.one, ctx(2)]
        bad = check_lift(rs, kind, r, xis) if args.verify_lift else []
        summary = f"torus lift kind {kind} with r = {ctx.format(r)} over {S!r}"
        if bad:
            _emit({"error": "lift check failed", "failures": bad[:10]})
            return 1
    _emit({"before": matrix_json(ctx, rs.rank, target.matrix), "after": matrix_json(after.ctx, rs.rank, after.matrix),
           "automorphism": summary})
    _say(summary)
    return 0


def cmd_fixtures(args) -> int:
    from .fixtures import check_all

    rep = check_all()
    _emit(rep.to_json())
    _say(*(r.summary() for r in rep.results))
    for name, row, col, shown, gen in rep.silent_divergences():
        _say(f"  {name} ({row}, {col}): display {shown}, generated {gen}")
    return 0 if rep.all_match else 1


# --- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chevalley-b", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)
    ring_help = 'ring descriptor, e.g. \'{"kind":"zmod","p":3,"k":2}\' or "dual(gfp(7))"'

    s = sub.add_parser("roots", help="list the roots of B_l")
    s.add_argument("--rank", type=int, required=True)
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("gens", help="matrix of x_alpha(t), w_alpha(t), h_alpha(t) or ad x_alpha")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--ring", help=ring_help)
    s.add_argument("--what", choices=["x", "w", "h", "ad"], required=True)
    s.add_argument("--root", required=True, help='root literal such as "e1-e2"')
    s.add_argument("--param", default="1")
    s.set_defaults(func=cmd_gens)

    s = sub.add_parser("verify", help="sampled relation checks")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--ring", required=True, help=ring_help)
    s.add_argument("--suite", choices=["steinberg", "con", "weyl", "all"], default="all")
    s.add_argument("--samples", type=int, default=50)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("compose", help="lambda * torus * x_+ * x_- from coefficients")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--ring", required=True, help=ring_help)
    s.add_argument("--coeffs", required=True,
                   help='{"lambda": ..., "s": [...], "t": [...], "u": [...]}, @file, - or "random"')
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("reconstruct", help="coefficients of a matrix congruent to 1 modulo J")
    s.add_argument("--rank", type=int)
    s.add_argument("--ring", help=ring_help + " (default: taken from the matrix JSON)")
    s.add_argument("--matrix", required=True, help="matrix JSON, @file or - for standard input")
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("matrix-units", help="certify recipes for all matrix units")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--ring", required=True, help=ring_help)
    s.add_argument("--show", help="i,j: print the recipe of one unit (0-based indices or labels)")
    s.set_defaults(func=cmd_matrix_units)

    s = sub.add_parser("aut", help="apply a standard automorphism to a generator")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--ring", required=True, help=ring_help)
    s.add_argument("--kind", choices=["ring", "inner", "lift"], required=True)
    s.add_argument("--target", default="x:e1-e2:1", help="word kind:root:param joined by ','")
    s.add_argument("--sigma", choices=["identity", "dual-scale", "sqrt-conjugate", "frobenius"],
                   default="identity")
    s.add_argument("--u", default="1", help="unit for dual-scale")
    s.add_argument("--by", help="conjugating word for --kind inner")
    s.add_argument("--r", default="2", help="unit r for --kind lift")
    s.add_argument("--lift-kind", type=int, help="1 or l")
    s.add_argument("--verify-lift", action="store_true", help="also check the lift on every root")
    s.set_defaults(func=cmd_aut)

    s = sub.add_parser("fixtures", help="compare transcribed matrices with generated ones")
    s.add_argument("--check", action="store_true", default=True)
    s.set_defaults(func=cmd_fixtures)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))   # exits with status 2
    return 2
