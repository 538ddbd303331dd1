"""The auxiliary type beta and the kernel-type recursion.

For alpha = (r, d) with h = gcd(r, d), a general bundle E of type alpha is a
quotient of F^h for a fixed F of type beta = (s, e), and the kernel has type

    alpha_1 = h * beta - alpha.

Iterating until the rank divides the degree gives the reduction chain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BundleType, _as_type, check_genus, euler_chi, gcd_type
from .errors import InvalidInput, InvariantViolation

__all__ = [
    "BetaSolution",
    "DescentStep",
    "ReductionChain",
    "solve_beta",
    "scan_beta",
    "kernel_type",
    "descent_step",
    "descent_chain",
]


@dataclass(frozen=True)
class BetaSolution:
    s: int
    t: int
    e: int

    @property
    def beta(self) -> BundleType:
        return BundleType(self.s, self.e)


def _in_range(s: int, r: int, h: int) -> bool:
    if h == r:
        return s == 2
    return r < s * h < 2 * r


def solve_beta(g: int, alpha) -> BetaSolution:
    """Unique (s, t, e) with s*d - t*r = h, e = t - (g-1)s and s in range.

    The range is r/h < s < 2r/h when h < r, and s = 2 when h = r.
    One solution comes from inverting d/h modulo r/h; it is then shifted by a
    multiple of r/h into the interval.
    """
    check_genus(g)
    a = _as_type(alpha)
    if a.rank < 1:
        raise InvalidInput(f"rank must be >= 1, got {a.rank}")
    r, d = a.rank, a.degree
    h = gcd_type(a)
    q = r // h
    if h == r:
        s = 2
    else:
        s0 = pow(d // h, -1, q)
        s = s0 - ((s0 - q - 1) // q) * q
    num = s * d - h
    if num % r:
        raise InvariantViolation("beta-diophantine", f"s={s} does not solve s*d - t*r = h for {a}")
    t = num // r
    if not _in_range(s, r, h):
        raise InvariantViolation("beta-range", f"s={s} outside the admissible range for {a}")
    sol = BetaSolution(s, t, t - (g - 1) * s)
    if euler_chi(sol.beta, a, g) != h:
        raise InvariantViolation("beta-euler", f"chi({sol.beta}, {a}) != {h}")
    return sol


def scan_beta(g: int, alpha) -> list[BetaSolution]:
    """All solutions found by brute force over s in [r/h, 2r/h].

    Independent of :func:`solve_beta`; used as its oracle.  For h = r the
    admissible set is {2} by definition, so only s = 2 is tried.
    """
    a = _as_type(alpha)
    r, d = a.rank, a.degree
    h = gcd_type(a)
    candidates = [2] if h == r else range(r // h, 2 * r // h + 1)
    out = []
    for s in candidates:
        if (s * d - h) % r == 0:
            t = (s * d - h) // r
            out.append(BetaSolution(s, t, t - (g - 1) * s))
    return out


def kernel_type(h: int, beta, alpha) -> BundleType:
    """(h*s - r, h*e - d)."""
    b, a = _as_type(beta), _as_type(alpha)
    k = h * b - a
    if k.rank < 1:
        raise InvariantViolation("kernel-rank", f"kernel type {k} has rank < 1")
    return k


@dataclass(frozen=True)
class DescentStep:
    alpha: BundleType
    h: int
    beta: BundleType
    alpha1: BundleType
    h1: int
    chi_a1_beta: int
    l: int
    fiber_dim: int

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha.as_list(),
            "beta": self.beta.as_list(),
            "alpha1": self.alpha1.as_list(),
            "h": self.h,
            "h1": self.h1,
            "chi_a1_beta": self.chi_a1_beta,
            "l": self.l,
            "fiber_dim": self.fiber_dim,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> DescentStep:
        return cls(
            alpha=BundleType(*obj["alpha"]),
            h=obj["h"],
            beta=BundleType(*obj["beta"]),
            alpha1=BundleType(*obj["alpha1"]),
            h1=obj["h1"],
            chi_a1_beta=obj["chi_a1_beta"],
            l=obj["l"],
            fiber_dim=obj["fiber_dim"],
        )


def _require(ok: bool, identity: str, detail: str):
    if not ok:
        raise InvariantViolation(identity, detail)


def check_step(g: int, step: DescentStep) -> None:
    """Re-verify every identity a descent step must satisfy."""
    a, b, a1 = step.alpha, step.beta, step.alpha1
    h, h1 = step.h, step.h1
    r, r1 = a.rank, a1.rank
    where = f"alpha={a}, g={g}"
    _require(a1 == h * b - a, "kernel-type", where)
    _require(h == gcd_type(a) and h1 == gcd_type(a1), "gcd", where)
    _require(euler_chi(b, a, g) == h, "beta-euler", where)
    _require(not (h < r) or r1 < r, "rank-decrease", where)
    _require(h1 % h == 0, "h-divides-h1", where)
    _require(a1.degree == h * b.degree - a.degree, "degree-relation", where)
    _require(step.chi_a1_beta == euler_chi(a1, b, g), "chi-a1-beta", where)
    _require(step.chi_a1_beta % h1 == 0, "h1-divides-chi", where)
    _require(step.l * h1 == step.chi_a1_beta, "l", where)
    _require(step.fiber_dim == h * (step.chi_a1_beta - h), "fiber-dim", where)
    _require((r * r - r1 * r1) * (g - 1) == step.fiber_dim, "lambda-dimension", where)


def descent_step(g: int, alpha) -> DescentStep:
    """One reduction alpha -> alpha_1, with every invariant checked."""
    check_genus(g)
    a = _as_type(alpha)
    h = gcd_type(a)
    if h >= a.rank:
        raise InvalidInput(f"type {a} is terminal (rank divides degree); no descent step")
    sol = solve_beta(g, a)
    beta = sol.beta
    a1 = kernel_type(h, beta, a)
    h1 = gcd_type(a1)
    chi = euler_chi(a1, beta, g)
    if chi % h1:
        raise InvariantViolation("h1-divides-chi", f"alpha={a}, g={g}")
    step = DescentStep(a, h, beta, a1, h1, chi, chi // h1, h * (chi - h))
    check_step(g, step)
    return step


@dataclass(frozen=True)
class ReductionChain:
    genus: int
    initial: BundleType
    steps: tuple[DescentStep, ...]
    terminal: BundleType
    terminal_twist: int

    @property
    def total_fiber_dim(self) -> int:
        return sum(s.fiber_dim for s in self.steps)

    def to_dict(self) -> dict:
        from .core import moduli

        m = moduli(self.genus, self.initial)
        return {
            "schema": 1,
            "genus": self.genus,
            "initial": m.to_dict(),
            "steps": [s.to_dict() for s in self.steps],
            "terminal": self.terminal.as_list(),
            "terminal_twist": self.terminal_twist,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> ReductionChain:
        init = obj["initial"]
        return cls(
            genus=obj["genus"],
            initial=BundleType(init["rank"], init["degree"]),
            steps=tuple(DescentStep.from_dict(s) for s in obj["steps"]),
            terminal=BundleType(*obj["terminal"]),
            terminal_twist=obj["terminal_twist"],
        )


def descent_chain(g: int, alpha) -> ReductionChain:
    """Iterate :func:`descent_step` until the rank divides the degree.

    ``terminal_twist`` is the degree of the line bundle that takes the
    terminal type (r, d) to (r, 0), i.e. -d/r.
    """
    check_genus(g)
    a = _as_type(alpha)
    if a.rank < 1:
        raise InvalidInput(f"rank must be >= 1, got {a.rank}")
    steps = []
    cur = a
    while cur.degree % cur.rank:
        if len(steps) >= a.rank:
            raise InvariantViolation("termination", f"chain from {a} exceeded {a.rank} steps")
        step = descent_step(g, cur)
        steps.append(step)
        cur = step.alpha1
    return ReductionChain(g, a, tuple(steps), cur, -(cur.degree // cur.rank))
