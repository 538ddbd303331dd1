"""Symbolic transport of Brauer classes through the construction of mu.

A class is a formal integer multiple of one generator per space.  Every edge
of a diagram multiplies the coefficient by an integer fixed by the rule that
licenses it:

=====================  ==========================================
edge                   coefficient
=====================  ==========================================
GrassBundlePullback    1 (Grassmannian bundle pulls the class back)
CovariantFrame(w)      +w
ContravariantFrame(w)  -w
TensorIso              1
EquivariantPullback    1, times the lifted sub-derivation
Induction              net coefficient of the sub-derivation
LambdaF                product of its part edges
HeckeRoof              source-side frame / target-side frame
=====================  ==========================================

Representability of a class by a central simple algebra of dimension s^2
(and hence the existence of weight-w bundles of rank s) is recorded as rule
metadata only; it does not change coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from functools import reduce
from operator import mul

from .core import BundleType, _as_type, check_genus, gcd_type
from .errors import InapplicableEdge, InvalidInput, InvariantViolation

__all__ = [
    "ClassExpr",
    "EdgeKind",
    "DiagramEdge",
    "DerivationStep",
    "Derivation",
    "rep_algebra_dim",
    "weight_class",
    "transport",
    "transport_path",
    "psi",
    "lambda_f_edge",
    "hecke_roof_edge",
    "verify_main",
    "MUTATIONS",
]


def psi(t) -> str:
    """Generator name for the Brauer class of M(r, d)."""
    t = _as_type(t)
    return f"psi({t.rank},{t.degree})"


@dataclass(frozen=True)
class ClassExpr:
    generator: str
    coeff: int = 1

    def to_dict(self) -> dict:
        return {"generator": self.generator, "coeff": self.coeff}

    @classmethod
    def from_dict(cls, obj) -> ClassExpr:
        return cls(obj["generator"], obj["coeff"])

    def __str__(self) -> str:
        if self.coeff == 0:
            return "0"
        if self.coeff == 1:
            return self.generator
        if self.coeff == -1:
            return f"-{self.generator}"
        return f"{self.coeff}*{self.generator}"


def rep_algebra_dim(t) -> int:
    """Dimension h^2 of the central simple algebra representing psi(r, d)."""
    return gcd_type(t) ** 2


def weight_class(w: int, base: ClassExpr) -> ClassExpr:
    """Class defined by a weight-``w`` bundle over the space of ``base``."""
    return ClassExpr(base.generator, w * base.coeff)


class EdgeKind(str, Enum):
    GRASS_PULLBACK = "GrassBundlePullback"
    COVARIANT_FRAME = "CovariantFrame"
    CONTRAVARIANT_FRAME = "ContravariantFrame"
    HECKE_ROOF = "HeckeRoof"
    LAMBDA_F = "LambdaF"
    TENSOR_ISO = "TensorIso"
    EQUIVARIANT_PULLBACK = "EquivariantPullback"
    INDUCTION = "Induction"


_FRAMES = (EdgeKind.COVARIANT_FRAME, EdgeKind.CONTRAVARIANT_FRAME)


@dataclass(frozen=True)
class DiagramEdge:
    kind: EdgeKind
    source: str
    target: str
    weight: int = 0
    parts: tuple[DiagramEdge, ...] = ()
    sub: Derivation | None = None
    rule: str = ""

    def coefficient(self) -> int:
        k = self.kind
        if k is EdgeKind.COVARIANT_FRAME:
            return self.weight
        if k is EdgeKind.CONTRAVARIANT_FRAME:
            return -self.weight
        if k in (EdgeKind.GRASS_PULLBACK, EdgeKind.TENSOR_ISO):
            return 1
        if k in (EdgeKind.EQUIVARIANT_PULLBACK, EdgeKind.INDUCTION):
            return 1 if self.sub is None else self.sub.net_coefficient
        if k is EdgeKind.LAMBDA_F:
            return reduce(mul, (p.coefficient() for p in self.parts), 1)
        if k is EdgeKind.HECKE_ROOF:
            src, tgt = self.parts
            c_src, c_tgt = src.coefficient(), tgt.coefficient()
            if c_tgt == 0 or c_src % c_tgt:
                raise InvariantViolation("hecke-roof-division", f"{c_src}/{c_tgt} is not an integer")
            return c_src // c_tgt
        raise InvalidInput(f"unknown edge kind {k!r}")

    def flipped(self) -> DiagramEdge:
        """Same frame edge with the opposite variance."""
        if self.kind is EdgeKind.COVARIANT_FRAME:
            return replace(self, kind=EdgeKind.CONTRAVARIANT_FRAME)
        if self.kind is EdgeKind.CONTRAVARIANT_FRAME:
            return replace(self, kind=EdgeKind.COVARIANT_FRAME)
        raise InvalidInput(f"{self.kind.value} is not a frame edge")

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind.value,
            "source": self.source,
            "target": self.target,
            "rule": self.rule,
            "coeff": self.coefficient(),
        }
        if self.kind in _FRAMES:
            out["weight"] = self.weight
        if self.parts:
            out["parts"] = [p.to_dict() for p in self.parts]
        if self.sub is not None:
            out["sub"] = self.sub.to_dict()
        return out

    @classmethod
    def from_dict(cls, obj) -> DiagramEdge:
        sub = obj.get("sub")
        return cls(
            EdgeKind(obj["kind"]),
            obj["source"],
            obj["target"],
            obj.get("weight", 0),
            tuple(cls.from_dict(p) for p in obj.get("parts", ())),
            Derivation.from_dict(sub) if sub is not None else None,
            obj.get("rule", ""),
        )


def transport(expr: ClassExpr, edge: DiagramEdge) -> ClassExpr:
    if expr.generator != edge.source:
        raise InapplicableEdge(f"edge {edge.kind.value} starts at {edge.source}, not {expr.generator}")
    return ClassExpr(edge.target, expr.coeff * edge.coefficient())


def transport_path(expr: ClassExpr, edges) -> ClassExpr:
    for e in edges:
        expr = transport(expr, e)
    return expr


def frame_edge(covariant: bool, weight: int, source: str, target: str, rule: str) -> DiagramEdge:
    kind = EdgeKind.COVARIANT_FRAME if covariant else EdgeKind.CONTRAVARIANT_FRAME
    return DiagramEdge(kind, source, target, weight=weight, rule=rule)


def lambda_f_edge(source: str, target: str, h: int, h1: int, covariant: bool = False) -> DiagramEdge:
    """lambda_F^* psi(r1, d1) = psi(r, d).

    lambda_F is the Grassmannian bundle Gr_h(P)/PGL(h1) with P = Hom(E1, F)
    of weight -1; M(r, d) is recovered from its contravariant frame bundle.
    """
    gr = f"Gr_{h}(P)/PGL({h1})"
    parts = (
        DiagramEdge(EdgeKind.GRASS_PULLBACK, source, gr, rule="grassmannian bundle pulls back the base class"),
        frame_edge(covariant, -1, gr, target, f"frame quotient by PGL({h}); P has weight -1"),
    )
    return DiagramEdge(EdgeKind.LAMBDA_F, source, target, parts=parts, rule="lambda_F pullback of the kernel class")


def hecke_roof_edge(
    source: str,
    target: str,
    h1: int,
    h: int,
    from_theta2: bool = True,
    theta1_covariant: bool = False,
    theta2_covariant: bool = True,
) -> DiagramEdge:
    """Identify theta2^* psi(h1, -h) with theta1^* psi(h1, 0) on P(h1, 0, h).

    theta1 uses contravariant frames of H1 = Hom(E1, O_x) (weight -1);
    theta2 uses covariant frames of H2 = Ext(O_x, E2) (weight +1).  Both
    frame quotients are the same PGL(h)-space.
    """
    fr = f"Fr_{h}/PGL({h})[P({h1},0,{h})]"
    t1 = frame_edge(theta1_covariant, -1, fr, fr, f"theta1 side: frames of H1 (weight -1), rank {h1}")
    t2 = frame_edge(theta2_covariant, 1, fr, fr, f"theta2 side: frames of H2 (weight +1), rank {h1}")
    parts = (t2, t1) if from_theta2 else (t1, t2)
    return DiagramEdge(EdgeKind.HECKE_ROOF, source, target, parts=parts, rule="Hecke roof: both frame quotients agree")


@dataclass(frozen=True)
class DerivationStep:
    edge: DiagramEdge
    result: ClassExpr
    rep_dim: int

    @property
    def rule(self) -> str:
        return self.edge.rule

    def to_dict(self) -> dict:
        return {
            "rule": self.edge.rule,
            "coeff_after": self.result.coeff,
            "result": self.result.to_dict(),
            "rep_dim": self.rep_dim,
            "edge": self.edge.to_dict(),
        }

    @classmethod
    def from_dict(cls, obj) -> DerivationStep:
        return cls(DiagramEdge.from_dict(obj["edge"]), ClassExpr.from_dict(obj["result"]), obj["rep_dim"])


@dataclass(frozen=True)
class Derivation:
    genus: int
    root: BundleType
    start: ClassExpr
    expected: ClassExpr
    steps: tuple[DerivationStep, ...]

    @property
    def final(self) -> ClassExpr:
        return self.steps[-1].result if self.steps else self.start

    @property
    def net_coefficient(self) -> int:
        return self.final.coeff // self.start.coeff

    @property
    def equal(self) -> bool:
        return self.final == self.expected

    @property
    def verdict(self) -> str:
        return "equal" if self.equal else "not-equal"

    @property
    def rep_dims(self) -> list[int]:
        return [s.rep_dim for s in self.steps]

    def replay(self) -> ClassExpr:
        expr = self.start
        for s in self.steps:
            expr = transport(expr, s.edge)
            if expr != s.result:
                raise InvariantViolation("replay", f"{expr} != recorded {s.result}")
        return expr

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "genus": self.genus,
            "root": self.root.as_list(),
            "start": self.start.to_dict(),
            "expected": self.expected.to_dict(),
            "edges": [s.to_dict() for s in self.steps],
            "verdict": self.verdict,
        }

    @classmethod
    def from_dict(cls, obj) -> Derivation:
        return cls(
            obj["genus"],
            BundleType(*obj["root"]),
            ClassExpr.from_dict(obj["start"]),
            ClassExpr.from_dict(obj["expected"]),
            tuple(DerivationStep.from_dict(s) for s in obj["edges"]),
        )


MUTATIONS = ("rho", "theta1", "theta2")


def _derive(g: int, a: BundleType, steps_spec) -> Derivation:
    h = gcd_type(a)
    start = ClassExpr(psi((h, 0)))
    expr = start
    steps = []
    for edge, anchor in steps_spec:
        expr = transport(expr, edge)
        steps.append(DerivationStep(edge, expr, rep_algebra_dim(anchor)))
    return Derivation(g, a, start, ClassExpr(psi(a)), tuple(steps))


def verify_main(g: int, alpha, mutate: str | None = None) -> Derivation:
    """Certify mu^* psi(h, 0) = psi(r, d) by transporting psi(h, 0) back.

    The top level of the trace has edges [mu2, theta2/theta1 roof, muhat1,
    rho] for non-terminal types, each recursive map carrying its own
    sub-derivation; terminal types have the single twist edge.

    ``mutate`` flips one frame variance at the top level ("rho", "theta1" or
    "theta2") and exists to check that the certificate can fail.
    """
    check_genus(g)
    a = _as_type(alpha)
    if a.rank < 1:
        raise InvalidInput(f"rank must be >= 1, got {a.rank}")
    if mutate is not None and mutate not in MUTATIONS:
        raise InvalidInput(f"unknown mutation {mutate!r}; expected one of {MUTATIONS}")
    h = gcd_type(a)

    if a.degree % a.rank == 0:
        if mutate is not None:
            raise InvalidInput(f"type {a} is terminal; there is no frame edge to mutate")
        twist = DiagramEdge(
            EdgeKind.TENSOR_ISO, psi((h, 0)), psi(a),
            rule=f"tensor by a line bundle of degree {a.degree // a.rank}",
        )
        return _derive(g, a, [(twist, a)])

    from .descent import descent_step

    st = descent_step(g, a)
    a1, h1 = st.alpha1, st.h1
    e2 = BundleType(h1, -h)
    on_par = f"theta1^*psi({h1},0)"
    on_phat = f"thetahat1^*{psi(a1)}"

    sub2 = verify_main(g, e2)
    sub1 = verify_main(g, a1)
    mu2 = DiagramEdge(
        EdgeKind.INDUCTION, psi((h, 0)), psi(e2), sub=sub2,
        rule=f"induction: mu2^* psi({h},0) = {psi(e2)}",
    )
    roof = hecke_roof_edge(
        psi(e2), on_par, h1, h,
        theta1_covariant=(mutate == "theta1"),
        theta2_covariant=(mutate != "theta2"),
    )
    muhat1 = DiagramEdge(
        EdgeKind.EQUIVARIANT_PULLBACK, on_par, on_phat, sub=sub1,
        rule=f"muhat1 = pullback of mu1 along theta1; mu1^* psi({h1},0) = {psi(a1)}",
    )
    rho = lambda_f_edge(on_phat, psi(a), h, h1, covariant=(mutate == "rho"))
    rho = replace(rho, rule="rho: lambda_F = thetahat1 . rho, lambda_F^* psi(r1,d1) = psi(r,d)")
    return _derive(g, a, [(mu2, e2), (roof, BundleType(h1, 0)), (muhat1, a1), (rho, a)])
