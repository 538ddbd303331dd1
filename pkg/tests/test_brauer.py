import json
import random

import pytest

from modrat.brauer import (
    ClassExpr,
    Derivation,
    DiagramEdge,
    EdgeKind,
    hecke_roof_edge,
    lambda_f_edge,
    psi,
    rep_algebra_dim,
    transport,
    transport_path,
    verify_main,
    weight_class,
)
from modrat.errors import InapplicableEdge, InvalidInput


@pytest.mark.parametrize("t, dim", [((5, 3), 1), ((4, 2), 4), ((6, 0), 36)])
def test_rep_algebra_dim(t, dim):
    assert rep_algebra_dim(t) == dim


def test_weight_class():
    sigma = ClassExpr("sigma")
    assert weight_class(1, sigma) == sigma
    assert weight_class(-1, sigma) == ClassExpr("sigma", -1)
    assert weight_class(0, sigma).coeff == 0
    assert weight_class(3, ClassExpr("sigma", -2)).coeff == -6


def test_transport_lambda_f():
    e = lambda_f_edge(psi((2, -6)), psi((5, 3)), 1, 2)
    assert transport(ClassExpr(psi((2, -6))), e) == ClassExpr(psi((5, 3)))


def test_transport_hecke_roof():
    e = hecke_roof_edge(psi((2, 0)), psi((2, -1)), 2, 1, from_theta2=False)
    assert transport(ClassExpr(psi((2, 0))), e) == ClassExpr(psi((2, -1)))


def test_contravariant_weight_minus_one():
    e = DiagramEdge(EdgeKind.CONTRAVARIANT_FRAME, "sigma", "sigma", weight=-1)
    assert e.coefficient() == 1
    assert transport(ClassExpr("sigma"), e) == ClassExpr("sigma")
    assert e.flipped().coefficient() == -1


def test_frame_coefficients():
    for w in range(-3, 4):
        assert DiagramEdge(EdgeKind.COVARIANT_FRAME, "x", "y", weight=w).coefficient() == w
        assert DiagramEdge(EdgeKind.CONTRAVARIANT_FRAME, "x", "y", weight=w).coefficient() == -w


def test_inapplicable_edge():
    e = DiagramEdge(EdgeKind.TENSOR_ISO, "a", "b")
    with pytest.raises(InapplicableEdge):
        transport(ClassExpr("c"), e)


def test_functorial_composition():
    rng = random.Random(7)
    kinds = [EdgeKind.COVARIANT_FRAME, EdgeKind.CONTRAVARIANT_FRAME, EdgeKind.GRASS_PULLBACK]
    for _ in range(200):
        n = rng.randint(1, 6)
        edges = [
            DiagramEdge(rng.choice(kinds), f"n{i}", f"n{i + 1}", weight=rng.randint(-3, 3))
            for i in range(n)
        ]
        prod = 1
        for e in edges:
            prod *= e.coefficient()
        c0 = rng.randint(-5, 5)
        assert transport_path(ClassExpr("n0", c0), edges) == ClassExpr(f"n{n}", c0 * prod)
        k = rng.randint(0, n)
        mid = transport_path(ClassExpr("n0", c0), edges[:k])
        assert transport_path(mid, edges[k:]) == ClassExpr(f"n{n}", c0 * prod)


def test_verify_main_4_2():
    d = verify_main(2, (4, 2))
    assert d.verdict == "equal"
    assert len(d.steps) == 4
    assert d.rep_dims == [4, 4, 4, 4]
    assert all(s.edge.coefficient() == 1 for s in d.steps)


def test_verify_main_terminal():
    d = verify_main(2, (1, 7))
    assert d.verdict == "equal"
    assert [s.edge.kind for s in d.steps] == [EdgeKind.TENSOR_ISO]


def test_mutation_5_3():
    d = verify_main(2, (5, 3), mutate="rho")
    assert d.verdict == "not-equal"
    assert d.final == ClassExpr(psi((5, 3)), -1)


@pytest.mark.parametrize("m", ["rho", "theta1", "theta2"])
def test_every_single_flip_detected(m):
    for r in range(2, 9):
        for d in range(1, r):
            if d % r:
                assert verify_main(3, (r, d), mutate=m).final.coeff == -1


def test_mutation_on_terminal_rejected():
    with pytest.raises(InvalidInput):
        verify_main(2, (2, 4), mutate="rho")


def test_rep_dims_along_nodes(sweep_box):
    for g, r, d in sweep_box[:300]:
        der = verify_main(g, (r, d))
        if len(der.steps) == 4:
            st_h = rep_algebra_dim((r, d))
            mu2, roof, muhat1, rho = der.steps
            assert rho.rep_dim == st_h
            assert mu2.rep_dim == st_h  # (h1, -h) has gcd h


def test_replay_and_round_trip():
    der = verify_main(2, (7, 3))
    assert der.replay() == der.final
    again = Derivation.from_dict(json.loads(json.dumps(der.to_dict())))
    assert again == der
    assert again.replay() == der.final
