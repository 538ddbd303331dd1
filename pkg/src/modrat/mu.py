"""The birationally linear map mu: M(r, d) -> M(h, 0) as an explicit tree.

Non-terminal types decompose as mu = mu2 . theta2 . muhat1 . rho, where
muhat1 is the pullback of mu1: M(r1, d1) -> M(h1, 0) along theta1 and mu2 is
the map for (h1, -h).  Terminal types (r | d) are a single twist by a line
bundle.  Each node carries the dimension of its generic fibre; the fibres
add up to the affine factor (r^2 - h^2)(g - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import BundleType, _as_type, check_genus, gcd_type, moduli
from .descent import DescentStep, descent_step
from .errors import InvalidInput, InvariantViolation
from .hecke import make_hecke

__all__ = [
    "NodeKind",
    "Space",
    "MuNode",
    "MuTree",
    "FixedDetReport",
    "compose_mu",
    "affine_dim",
    "fixed_det_report",
    "check_tree",
]


class NodeKind(str, Enum):
    TENSOR_ISO = "TensorIso"
    RHO = "Rho"
    MU_HAT1 = "MuHat1"
    THETA2 = "Theta2"
    MU2 = "Mu2"


@dataclass(frozen=True)
class Space:
    """A space in the diagram, known only by name and dimension."""

    label: str
    dim: int

    def to_dict(self) -> dict:
        return {"label": self.label, "dim": self.dim}

    @classmethod
    def from_dict(cls, obj) -> Space:
        return cls(obj["label"], obj["dim"])


def _M(g: int, t: BundleType) -> Space:
    return Space(f"M{t}", moduli(g, t).dim)


@dataclass(frozen=True)
class MuNode:
    kind: NodeKind
    source: Space
    target: Space
    fiber_dim: int
    subtree: MuTree | None = None

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind.value,
            "fiber_dim": self.fiber_dim,
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
        }
        if self.subtree is not None:
            out["subtree"] = self.subtree.to_dict()
        return out

    @classmethod
    def from_dict(cls, obj) -> MuNode:
        sub = obj.get("subtree")
        return cls(
            NodeKind(obj["kind"]),
            Space.from_dict(obj["source"]),
            Space.from_dict(obj["target"]),
            obj["fiber_dim"],
            MuTree.from_dict(sub) if sub is not None else None,
        )


@dataclass(frozen=True)
class MuTree:
    genus: int
    root: BundleType
    nodes: tuple[MuNode, ...]
    total_fiber_dim: int
    target: BundleType
    step: DescentStep | None = None

    @property
    def h(self) -> int:
        return self.target.rank

    def node(self, kind: NodeKind) -> MuNode:
        for n in self.nodes:
            if n.kind is kind:
                return n
        raise KeyError(kind)

    def depth(self) -> int:
        subs = [n.subtree.depth() for n in self.nodes if n.subtree is not None]
        return 1 + max(subs, default=0)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "genus": self.genus,
            "root": self.root.as_list(),
            "nodes": [n.to_dict() for n in self.nodes],
            "total_fiber_dim": self.total_fiber_dim,
            "target": self.target.as_list(),
        }

    @classmethod
    def from_dict(cls, obj) -> MuTree:
        g = obj["genus"]
        root = BundleType(*obj["root"])
        nodes = tuple(MuNode.from_dict(n) for n in obj["nodes"])
        step = descent_step(g, root) if root.degree % root.rank else None
        return cls(g, root, nodes, obj["total_fiber_dim"], BundleType(*obj["target"]), step)


def affine_dim(g: int, alpha) -> int:
    """(r^2 - h^2)(g - 1)."""
    check_genus(g)
    a = _as_type(alpha)
    h = gcd_type(a)
    return (a.rank ** 2 - h ** 2) * (g - 1)


def _fail(identity: str, root, detail: str = ""):
    raise InvariantViolation(identity, f"root={root}" + (f", {detail}" if detail else ""))


def check_tree(tree: MuTree) -> None:
    """Audit a tree: per-node dimension additivity, fibre formulas, total.

    Subtrees are audited recursively, so a tree is valid only if every
    subtree is.
    """
    g, root = tree.genus, tree.root
    h = gcd_type(root)
    if tree.target != BundleType(h, 0):
        _fail("mu-target", root, f"target {tree.target} != ({h},0)")
    for n in tree.nodes:
        if n.fiber_dim < 0:
            _fail("fiber-nonnegative", root, n.kind.value)
        if n.source.dim - n.target.dim != n.fiber_dim:
            _fail("dimension-additivity", root, n.kind.value)
        if n.subtree is not None:
            check_tree(n.subtree)
            if n.subtree.total_fiber_dim != n.fiber_dim:
                _fail("subtree-fiber", root, n.kind.value)
    if tree.step is None:
        if len(tree.nodes) != 1 or tree.nodes[0].kind is not NodeKind.TENSOR_ISO or tree.nodes[0].fiber_dim:
            _fail("terminal-shape", root)
    else:
        st = tree.step
        kinds = [n.kind for n in tree.nodes]
        if kinds != [NodeKind.RHO, NodeKind.MU_HAT1, NodeKind.THETA2, NodeKind.MU2]:
            _fail("node-order", root, str(kinds))
        rho, muhat1, theta2, mu2 = tree.nodes
        if rho.fiber_dim != st.h * (st.chi_a1_beta - st.h1):
            _fail("rho-fiber", root)
        if theta2.fiber_dim != st.h * (st.h1 - st.h):
            _fail("theta2-fiber", root)
        if muhat1.subtree.root != st.alpha1 or mu2.subtree.root != BundleType(st.h1, -st.h):
            _fail("subtree-roots", root)
        if st.fiber_dim != rho.fiber_dim + theta2.fiber_dim:
            _fail("lambda-split", root, "lambda fibre != rho fibre + thetahat1 fibre")
        r1, h1 = st.alpha1.rank, st.h1
        level = h * st.chi_a1_beta - h * h + (r1 ** 2 - h1 ** 2) * (g - 1) + (h1 ** 2 - h * h) * (g - 1)
        if level != affine_dim(g, root):
            _fail("level-decomposition", root)
    if tree.total_fiber_dim != sum(n.fiber_dim for n in tree.nodes):
        _fail("ledger-sum", root)
    if tree.total_fiber_dim != affine_dim(g, root):
        _fail("affine-dimension", root, f"{tree.total_fiber_dim} != {affine_dim(g, root)}")


def compose_mu(g: int, alpha, _depth_limit: int | None = None) -> MuTree:
    """Build and audit the composition tree for mu on type ``alpha``."""
    check_genus(g)
    a = _as_type(alpha)
    if a.rank < 1:
        raise InvalidInput(f"rank must be >= 1, got {a.rank}")
    if _depth_limit is None:
        _depth_limit = a.rank
    if _depth_limit < 0:
        _fail("recursion-depth", a)
    h = gcd_type(a)
    target = BundleType(h, 0)
    if a.degree % a.rank == 0:
        node = MuNode(NodeKind.TENSOR_ISO, _M(g, a), _M(g, target), 0)
        tree = MuTree(g, a, (node,), 0, target)
        check_tree(tree)
        return tree

    st = descent_step(g, a)
    h1 = st.h1
    if st.chi_a1_beta < h1:
        # rho compares Grassmannians of h-planes in ranks h1 < chi(alpha1, beta)
        _fail("rho-rank-order", a, f"chi(alpha1,beta)={st.chi_a1_beta} < h1={h1}")
    if st.alpha1.rank >= a.rank or h1 >= a.rank:
        _fail("subtree-rank", a)
    hk = make_hecke(g, h1, h)
    mu1 = compose_mu(g, st.alpha1, _depth_limit - 1)
    mu2 = compose_mu(g, BundleType(h1, -h), _depth_limit - 1)

    m_src = _M(g, a)
    m_a1 = _M(g, st.alpha1)
    phat = Space(f"Phat[{st.alpha1};{h1},0,{h}]", m_a1.dim + hk.theta_fiber_dim)
    par = Space(f"P({h1},0,{h})", hk.parmod_dim)
    m_h1 = _M(g, BundleType(h1, -h))
    nodes = (
        MuNode(NodeKind.RHO, m_src, phat, h * (st.chi_a1_beta - h1)),
        MuNode(NodeKind.MU_HAT1, phat, par, mu1.total_fiber_dim, mu1),
        MuNode(NodeKind.THETA2, par, m_h1, hk.theta_fiber_dim),
        MuNode(NodeKind.MU2, m_h1, _M(g, target), mu2.total_fiber_dim, mu2),
    )
    tree = MuTree(g, a, nodes, sum(n.fiber_dim for n in nodes), target, st)
    check_tree(tree)
    return tree


@dataclass(frozen=True)
class FixedDetReport:
    """Fixed-determinant summary.

    ``rational`` is True for coprime types and None otherwise: the map
    restricts to fixed determinant in every case, but only the coprime case
    yields a rationality statement.
    """

    root: BundleType
    coprime: bool
    fixed_det_dim: int
    rational: bool | None
    note: str

    def to_dict(self) -> dict:
        return {
            "root": self.root.as_list(),
            "coprime": self.coprime,
            "fixed_det_dim": self.fixed_det_dim,
            "rational": self.rational,
            "note": self.note,
        }


def fixed_det_report(g: int, alpha) -> FixedDetReport:
    check_genus(g)
    a = _as_type(alpha)
    m = moduli(g, a)
    dim = m.dim - g  # minus the Jacobian
    if m.h == 1:
        note = "mu restricts to fixed determinant; target M(1,L) is a point, so M(r,L) is rational"
        return FixedDetReport(a, True, dim, True, note)
    note = f"mu restricts to fixed determinant over M({m.h},L'); no rationality claim"
    return FixedDetReport(a, False, dim, None, note)
