"""Command line interface.

Exit codes: 0 success, 1 invariant violation, 2 invalid input.
Payloads go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .brauer import MUTATIONS, verify_main
from .core import BundleType, check_genus, moduli
from .descent import descent_chain
from .errors import InvalidInput, InvariantViolation
from .genericity import enumerate_configs
from .mu import compose_mu, fixed_det_report
from .sweep import INVARIANTS, run_sweep

EXIT_OK, EXIT_VIOLATION, EXIT_INVALID = 0, 1, 2

HIRSCH_COLUMNS = (
    "r_K", "d_K", "d_T", "r_I", "d_I", "r_Q", "d_Q",
    "passes_necessary", "ext_upper", "final_upper", "classification",
    "implication", "torsion_identity",
)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _tsv(rows, header) -> str:
    lines = ["\t".join(header)]
    lines += ["\t".join(_cell(v) for v in row) for row in rows]
    return "\n".join(lines)


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    return str(v)


def _type(args) -> BundleType:
    check_genus(args.genus)
    if args.rank < 1:
        raise InvalidInput(f"rank must be >= 1, got {args.rank}")
    return BundleType(args.rank, args.degree)


def render_chain(chain, fmt: str) -> str:
    if fmt == "json":
        return dumps(chain.to_dict())
    if fmt == "tsv":
        header = ("alpha", "beta", "alpha1", "h", "h1", "chi_a1_beta", "l", "fiber_dim")
        rows = [(s.alpha.as_list(), s.beta.as_list(), s.alpha1.as_list(), s.h, s.h1, s.chi_a1_beta, s.l, s.fiber_dim)
                for s in chain.steps]
        return _tsv(rows, header)
    m = moduli(chain.genus, chain.initial)
    out = [f"genus {chain.genus}, type {chain.initial}, h={m.h}, dim M={m.dim}"]
    if not chain.steps:
        out.append("  (no steps: rank divides degree)")
    for i, s in enumerate(chain.steps, 1):
        out.append(
            f"  step {i}: {s.alpha} -> {s.alpha1}  beta={s.beta} h={s.h} h1={s.h1} "
            f"chi(a1,beta)={s.chi_a1_beta} l={s.l} fiber={s.fiber_dim}"
        )
    out.append(f"terminal {chain.terminal}, twist {chain.terminal_twist}")
    return "\n".join(out)


def _flatten(tree, depth=0):
    for n in tree.nodes:
        yield depth, n
        if n.subtree is not None:
            yield from _flatten(n.subtree, depth + 1)


def render_mu(tree, report, fmt: str) -> str:
    if fmt == "json":
        payload = tree.to_dict()
        payload["fixed_det"] = report.to_dict()
        return dumps(payload)
    if fmt == "tsv":
        rows = [(d, n.kind.value, n.source.label, n.target.label, n.fiber_dim) for d, n in _flatten(tree)]
        return _tsv(rows, ("depth", "kind", "source", "target", "fiber_dim"))
    out = [f"mu: M{tree.root} -> M{tree.target}  (genus {tree.genus})"]
    for d, n in _flatten(tree):
        out.append(f"{'  ' * (d + 1)}{n.kind.value}: {n.source.label} -> {n.target.label}  fiber {n.fiber_dim}")
    out.append(f"total fiber dim {tree.total_fiber_dim}")
    if report.coprime:
        out.append(f"fixed determinant: coprime, dim {report.fixed_det_dim}, rational")
    else:
        out.append(f"fixed determinant: not coprime, dim {report.fixed_det_dim}; {report.note}")
    return "\n".join(out)


def render_derivation(der, fmt: str, trace: bool) -> str:
    if fmt == "json":
        return dumps(der.to_dict())
    out = [f"mu^* {der.start} = {der.final}  (expected {der.expected}): {der.verdict}"]
    out.append(f"rep dims {der.rep_dims}")
    if trace:
        def walk(d, depth):
            for s in d.steps:
                e = s.edge
                out.append(f"{'  ' * depth}[{e.kind.value} x{e.coefficient()}] {e.source} -> {s.result}  ({e.rule})")
                for p in e.parts:
                    out.append(f"{'  ' * (depth + 1)}- {p.kind.value} x{p.coefficient()}: {p.rule}")
                if e.sub is not None:
                    walk(e.sub, depth + 1)
        walk(der, 1)
    return "\n".join(out)


def render_sweep(rep, fmt: str) -> str:
    if fmt == "json":
        return dumps(rep.to_dict())
    if fmt == "tsv":
        header = ("genus", "rank", "degree", "h", "steps", "terminal", "total_fiber_dim") + INVARIANTS
        rows = [(r.genus, r.rank, r.degree, r.h, r.steps, r.terminal, r.total_fiber_dim)
                + tuple("pass" if r.checks[k] else "fail" for k in INVARIANTS) for r in rep.rows]
        return _tsv(rows, header)
    out = [f"genus {rep.genus}, 1 <= r <= {rep.max_rank}, |d| <= {rep.max_degree}: "
           f"{rep.passed} passed, {rep.failed} failed"]
    out += [f"  FAIL {f}" for f in rep.failures]
    return "\n".join(out)


def render_hirsch(results, fmt: str) -> str:
    if fmt == "json":
        return dumps({
            "schema": 1,
            "configs": [{"config": c.to_dict(), "verdict": v.to_dict()} for c, v in results],
        })
    rows = []
    for c, v in results:
        rows.append((c.r_K, c.d_K, c.d_T, c.r_I, c.I.degree, c.r_Q, c.Q.degree,
                     v.passes_necessary, v.ext_upper, v.final_upper, v.classification.value,
                     v.implication, v.torsion_identity))
    if fmt == "tsv":
        return _tsv(rows, HIRSCH_COLUMNS)
    fails = sum(v.implication is False for _, v in results)
    out = [f"{len(results)} configurations, {fails} implication failures"]
    for c, v in results:
        out.append(f"  K=({c.r_K},{c.d_K}) I={c.I} Q={c.Q} d_T={c.d_T}: {v.classification.value}"
                   f" (ext <= {v.ext_upper}, final <= {v.final_upper})")
    return "\n".join(out)


def cmd_chain(args) -> int:
    a = _type(args)
    print(render_chain(descent_chain(args.genus, a), args.format))
    return EXIT_OK


def cmd_mu(args) -> int:
    a = _type(args)
    print(render_mu(compose_mu(args.genus, a), fixed_det_report(args.genus, a), args.format))
    return EXIT_OK


def cmd_brauer(args) -> int:
    a = _type(args)
    der = verify_main(args.genus, a, mutate=args.mutate)
    print(render_derivation(der, args.format, args.trace))
    return EXIT_OK if der.equal else EXIT_VIOLATION


def cmd_verify(args) -> int:
    if args.max_rank < 1 or args.max_degree < 1:
        raise InvalidInput("--max-rank and --max-degree must be >= 1")
    rep = run_sweep(args.genus, args.max_rank, args.max_degree, args.jobs)
    print(render_sweep(rep, args.format))
    if rep.failed:
        for f in rep.failures:
            print(f, file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_hirsch(args) -> int:
    check_genus(args.genus)
    F = BundleType.of(args.rank_f, args.degree_f)
    E = BundleType.of(args.rank_e, args.degree_e)
    results = enumerate_configs(args.genus, F, E, args.max_dt)
    print(render_hirsch(results, args.format))
    bad = [c for c, v in results if v.implication is False or not v.torsion_identity]
    return EXIT_VIOLATION if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="modrat", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def typed(name, func, help, formats=("pretty", "json", "tsv")):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--genus", type=int, required=True)
        sp.add_argument("--rank", type=int, required=True)
        sp.add_argument("--degree", type=int, required=True)
        sp.add_argument("--format", choices=formats, default="pretty")
        sp.set_defaults(func=func)
        return sp

    typed("chain", cmd_chain, "descent chain of a type")
    typed("mu", cmd_mu, "composition tree of mu with fibre ledger")
    b = typed("brauer", cmd_brauer, "Brauer class certificate", formats=("pretty", "json"))
    b.add_argument("--trace", action="store_true", help="print every rule applied")
    b.add_argument("--mutate", choices=MUTATIONS, help="flip one frame variance (should fail)")

    v = sub.add_parser("verify", help="exhaustive sweep of all invariants")
    v.add_argument("--genus", type=int, required=True)
    v.add_argument("--max-rank", type=int, required=True)
    v.add_argument("--max-degree", type=int, required=True)
    v.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    v.add_argument("--format", choices=("pretty", "json", "tsv"), default="pretty")
    v.set_defaults(func=cmd_verify)

    hz = sub.add_parser("hirsch", help="enumerate kernel/image/torsion configurations")
    hz.add_argument("--genus", type=int, required=True)
    hz.add_argument("--rank-f", type=int, required=True)
    hz.add_argument("--degree-f", type=int, required=True)
    hz.add_argument("--rank-e", type=int, required=True)
    hz.add_argument("--degree-e", type=int, required=True)
    hz.add_argument("--max-dt", type=int, default=0)
    hz.add_argument("--format", choices=("pretty", "json", "tsv"), default="pretty")
    hz.set_defaults(func=cmd_hirsch)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"modrat: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InvariantViolation as exc:
        print(f"modrat: invariant violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
