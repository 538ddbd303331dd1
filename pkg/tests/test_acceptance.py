"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line; the lines are also collected in the
"acceptance criteria" section of the pytest terminal summary.
"""

import random
import time
from math import gcd

from conftest import beta_by_scan, chi_by_hand, mu_total_by_hand, step_by_hand
from modrat.brauer import MUTATIONS, rep_algebra_dim, verify_main
from modrat.core import BundleType, euler_chi
from modrat.descent import descent_chain, descent_step, solve_beta
from modrat.genericity import Classification, enumerate_configs
from modrat.hecke import hecke_brauer_targets, make_hecke
from modrat.mu import NodeKind, affine_dim, compose_mu

BOX = [(g, r, d) for g in (2, 3, 4) for r in range(1, 13) for d in range(-12, 13)]


def _chains():
    return [(g, descent_chain(g, (r, d))) for g, r, d in BOX]


def test_1_beta_uniqueness(verdict):
    t0 = time.perf_counter()
    bad = []
    for g, r, d in BOX:
        found = beta_by_scan(g, r, d)
        sol = solve_beta(g, (r, d))
        if len(found) != 1 or found[0] != (sol.s, sol.t, sol.e):
            bad.append((g, r, d, found))
    elapsed = time.perf_counter() - t0
    verdict(1, "beta uniqueness", not bad and elapsed < 5.0,
            f"{len(BOX)} types, {len(bad)} mismatches, {elapsed:.2f}s (limit 5s)")


def test_2_lambda_identity(verdict):
    n, bad = 0, []
    for g, ch in _chains():
        for st in ch.steps:
            n += 1
            r, r1 = st.alpha.rank, st.alpha1.rank
            if (r * r - r1 * r1) * (g - 1) != st.h * (st.chi_a1_beta - st.h):
                bad.append((g, st.alpha))
    verdict(2, "lambda_F dimension identity", not bad and n > 0, f"{n} steps, {len(bad)} failures")


def test_3_ledger(verdict):
    bad = []
    for g, r, d in BOX:
        total = compose_mu(g, (r, d)).total_fiber_dim
        if total != (r * r - gcd(r, d) ** 2) * (g - 1) or total != mu_total_by_hand(g, r, d):
            bad.append((g, r, d))
    verdict(3, "mu fibre ledger", not bad, f"{len(BOX)} types, {len(bad)} failures")


def test_4_divisibility(verdict):
    n, bad = 0, []
    for g, ch in _chains():
        for st in ch.steps:
            n += 1
            if st.h1 % st.h or st.chi_a1_beta % st.h1 or st.alpha1.degree != st.h * st.beta.degree - st.alpha.degree:
                bad.append((g, st.alpha))
    verdict(4, "divisibility and degree relation", not bad and n > 0, f"{n} steps, {len(bad)} failures")


def test_5_brauer_certificate(verdict):
    not_equal, unkilled, mutated = [], [], 0
    for g, r, d in BOX:
        der = verify_main(g, (r, d))
        der.replay()
        if not der.equal:
            not_equal.append((g, r, d))
        if d % r:
            mutated += 1
            if not any(not verify_main(g, (r, d), mutate=m).equal for m in MUTATIONS):
                unkilled.append((g, r, d))
            elif verify_main(g, (r, d), mutate="rho").equal:
                unkilled.append((g, r, d, "rho"))
    verdict(5, "Brauer certificate", not not_equal and not unkilled and mutated > 0,
            f"{len(BOX) - len(not_equal)}/{len(BOX)} equal; {mutated - len(unkilled)}/{mutated} mutants rejected")


def test_6_hecke_consistency(verdict):
    pairs = {(g, st.h1, st.h) for g, ch in _chains() for st in ch.steps}
    pairs |= {(g, h1, h) for g in (2, 3, 4) for h1 in range(1, 13) for h in range(1, h1 + 1) if h1 % h == 0}
    bad = []
    for g, h1, h in sorted(pairs):
        hk = make_hecke(g, h1, h)
        (_, dim1), (t2, dim2) = hecke_brauer_targets(hk)
        ok = (hk.parmod_dim_via(1) == hk.parmod_dim_via(2) == hk.parmod_dim
              == h1 * h1 * (g - 1) + 1 + h * (h1 - h))
        ok = ok and dim2 == h * h == rep_algebra_dim(t2) and t2 == BundleType(h1, -h)
        if not ok:
            bad.append((g, h1, h))
    verdict(6, "Hecke theta1/theta2 consistency", not bad, f"{len(pairs)} correspondences, {len(bad)} failures")


def test_7_hirsch_enumeration(verdict):
    t0 = time.perf_counter()
    n = impl_fail = tors_fail = mixed_bad = 0
    for g in (2, 3):
        for rF in range(1, 7):
            for rE in range(1, 7):
                for dF in range(-6, 7):
                    for dE in range(-6, 7):
                        for c, v in enumerate_configs(g, (rF, dF), (rE, dE), max_dT=4):
                            n += 1
                            impl_fail += v.implication is False
                            tors_fail += not v.torsion_identity
                            if c.r_K >= 1 and c.r_Q >= 1 and v.passes_necessary:
                                mixed_bad += v.classification is not Classification.GENERICALLY_IMPOSSIBLE
    elapsed = time.perf_counter() - t0
    ok = n > 0 and not (impl_fail or tors_fail or mixed_bad) and elapsed < 60.0
    verdict(7, "generic-map parameter count", ok,
            f"{n} configs, implication {impl_fail}, torsion {tors_fail}, mixed-rank {mixed_bad} failures, "
            f"{elapsed:.1f}s (limit 60s)")


WORKED = {
    # alpha: (beta, alpha1, chi(alpha1, beta), l, lambda fibre, affine total)
    (3, 1): ((4, -3), (1, -4), 9, 9, 8, 8),
    (4, 2): ((3, -2), (2, -6), 8, 4, 12, 12),
    (5, 3): ((7, -3), (2, -6), 22, 11, 21, 24),
}
MU_FIBERS = {(4, 2): [12, 0, 0, 0], (5, 3): [20, 0, 1, 3]}


def test_8_worked_instances(verdict):
    bad = []
    for (r, d), (beta, a1, chi, l, fib, total) in WORKED.items():
        st = descent_step(2, (r, d))
        got = (st.beta.as_list(), st.alpha1.as_list(), st.chi_a1_beta, st.l, st.fiber_dim, affine_dim(2, (r, d)))
        want = (list(beta), list(a1), chi, l, fib, total)
        sb, sa1, sc, _, sl, sf = step_by_hand(2, r, d)
        oracle = (list(sb), list(sa1), sc, sl, sf, mu_total_by_hand(2, r, d))
        if got != want or oracle != want or chi_by_hand(a1, beta, 2) != chi:
            bad.append(((r, d), got, want, oracle))
        if compose_mu(2, (r, d)).total_fiber_dim != total:
            bad.append(((r, d), "mu total"))
    for a, fibers in MU_FIBERS.items():
        tree = compose_mu(2, a)
        kinds = [NodeKind.RHO, NodeKind.MU_HAT1, NodeKind.THETA2, NodeKind.MU2]
        if [tree.node(k).fiber_dim for k in kinds] != fibers:
            bad.append((a, "mu fibres"))
    ch = descent_chain(2, (5, 3))
    if (ch.terminal.as_list(), ch.terminal_twist) != ([2, -6], 3):
        bad.append(((5, 3), "terminal"))
    verdict(8, "worked instances", not bad, "(3,1), (4,2), (5,3) at g=2" if not bad else str(bad))


def test_9_euler_form_algebra(verdict):
    rng = random.Random(20261016)
    bad = 0
    for _ in range(10_000):
        g = rng.randint(2, 12)
        a, b, c = (BundleType.formal(rng.randint(-1000, 1000), rng.randint(-1000, 1000)) for _ in range(3))
        k = rng.randint(-1000, 1000)
        bad += euler_chi(a + k * b, c, g) != euler_chi(a, c, g) + k * euler_chi(b, c, g)
        bad += euler_chi(c, a + k * b, g) != euler_chi(c, a, g) + k * euler_chi(c, b, g)
        bad += euler_chi(a, b, g) + euler_chi(b, a, g) != -2 * a.rank * b.rank * (g - 1)
        bad += euler_chi(a, b, g) != chi_by_hand(a.as_list(), b.as_list(), g)
    verdict(9, "Euler form bilinearity and antisymmetric defect", not bad,
            f"10000 random triples, {bad} failures")
