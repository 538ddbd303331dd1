"""Exhaustive verification over a box of bundle types."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .brauer import verify_main
from .core import BundleType, check_genus, gcd_type
from .descent import check_step, descent_chain, scan_beta, solve_beta
from .errors import InvalidInput, InvariantViolation
from .mu import affine_dim, compose_mu

INVARIANTS = ("beta_unique", "lambda_identity", "divisibility", "ledger", "brauer")


@dataclass
class SweepRow:
    genus: int
    rank: int
    degree: int
    h: int
    steps: int
    terminal: tuple[int, int]
    total_fiber_dim: int | None
    checks: dict[str, bool]
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "rank": self.rank,
            "degree": self.degree,
            "h": self.h,
            "steps": self.steps,
            "terminal": list(self.terminal),
            "total_fiber_dim": self.total_fiber_dim,
            "checks": dict(self.checks),
            "failures": list(self.failures),
        }


def _beta_unique(g: int, a: BundleType) -> None:
    found = scan_beta(g, a)
    if len(found) != 1:
        raise InvariantViolation("beta_unique", f"{len(found)} solutions for {a}")
    if found[0] != solve_beta(g, a):
        raise InvariantViolation("beta_unique", f"scan and solver disagree for {a}")
    h = gcd_type(a)
    s = found[0].s
    if h < a.rank and not (a.rank < s * h < 2 * a.rank):
        raise InvariantViolation("beta_unique", f"s={s} on the boundary for {a}")


def check_type(g: int, rank: int, degree: int) -> SweepRow:
    a = BundleType(rank, degree)
    checks = {}
    failures = []
    steps, terminal, total = 0, (rank, degree), None

    def run(name, fn):
        try:
            fn()
            checks[name] = True
        except InvariantViolation as exc:
            checks[name] = False
            failures.append(f"{name}: {exc}")

    def chain_checks(kind):
        chain = descent_chain(g, a)
        for st in chain.steps:
            if kind == "lambda_identity":
                r, r1 = st.alpha.rank, st.alpha1.rank
                if (r * r - r1 * r1) * (g - 1) != st.h * (st.chi_a1_beta - st.h):
                    raise InvariantViolation("lambda_identity", str(st.alpha))
            else:
                if st.h1 % st.h or st.chi_a1_beta % st.h1 or st.alpha1.degree != st.h * st.beta.degree - st.alpha.degree:
                    raise InvariantViolation("divisibility", str(st.alpha))
            check_step(g, st)

    def ledger():
        nonlocal total
        tree = compose_mu(g, a)
        total = tree.total_fiber_dim
        if total != affine_dim(g, a):
            raise InvariantViolation("ledger", f"{total} != {affine_dim(g, a)}")

    def brauer():
        d = verify_main(g, a)
        d.replay()
        if not d.equal:
            raise InvariantViolation("brauer", f"final class {d.final}")

    run("beta_unique", lambda: _beta_unique(g, a))
    run("lambda_identity", lambda: chain_checks("lambda_identity"))
    run("divisibility", lambda: chain_checks("divisibility"))
    run("ledger", ledger)
    run("brauer", brauer)
    try:
        chain = descent_chain(g, a)
        steps, terminal = len(chain.steps), tuple(chain.terminal.as_list())
    except InvariantViolation:
        pass
    return SweepRow(g, rank, degree, gcd_type(a), steps, terminal, total, checks, failures)


def _check_args(args):
    return check_type(*args)


@dataclass
class SweepReport:
    genus: int
    max_rank: int
    max_degree: int
    rows: list[SweepRow]

    @property
    def passed(self) -> int:
        return sum(r.ok for r in self.rows)

    @property
    def failed(self) -> int:
        return sum(not r.ok for r in self.rows)

    @property
    def failures(self) -> list[str]:
        return [f"(g={r.genus},r={r.rank},d={r.degree}) {f}" for r in self.rows for f in r.failures]

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "genus": self.genus,
            "max_rank": self.max_rank,
            "max_degree": self.max_degree,
            "passed": self.passed,
            "failed": self.failed,
            "failures": self.failures,
            "rows": [r.to_dict() for r in self.rows],
        }


def run_sweep(g: int, max_rank: int, max_degree: int, jobs: int | None = None) -> SweepReport:
    """Check every (r, d) with 1 <= r <= max_rank and |d| <= max_degree.

    Rows come back in input order whatever the worker count.
    """
    check_genus(g)
    if max_rank < 1 or max_degree < 0:
        raise InvalidInput("need max_rank >= 1 and max_degree >= 0")
    todo = [(g, r, d) for r in range(1, max_rank + 1) for d in range(-max_degree, max_degree + 1)]
    jobs = jobs or os.cpu_count() or 1
    if jobs <= 1 or len(todo) < 64:
        rows = [check_type(*t) for t in todo]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_check_args, todo, chunksize=32))
    return SweepReport(g, max_rank, max_degree, rows)
