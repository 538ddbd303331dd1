"""Hecke correspondence P(h1, 0, h) and its two projections.

theta1 forgets the subsheaf (lands in M(h1, 0)), theta2 keeps it (lands in
M(h1, -h)).  Both are Grassmannian bundles of h-planes in a rank h1 bundle,
so both fibres have dimension h * (h1 - h).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import BundleType, ModuliDescriptor, check_genus, gcd_type, moduli
from .errors import InvalidInput

__all__ = ["HeckeDescriptor", "make_hecke", "hecke_brauer_targets", "grassmannian_dim"]


def grassmannian_dim(j: int, n: int) -> int:
    """Dimension of Gr(j, k^n)."""
    if not 0 <= j <= n:
        raise InvalidInput(f"Gr({j}, {n}) is empty")
    return j * (n - j)


@dataclass(frozen=True)
class HeckeDescriptor:
    genus: int
    h1: int
    h: int
    m: int
    theta1_target: ModuliDescriptor
    theta2_target: ModuliDescriptor
    theta_fiber_dim: int
    parmod_dim: int

    @property
    def theta1_fiber_dim(self) -> int:
        # H1 has fibre Hom(E1, O_x), rank h1
        return grassmannian_dim(self.h, self.h1)

    @property
    def theta2_fiber_dim(self) -> int:
        # H2 has fibre Ext(O_x, E2), rank h1
        return grassmannian_dim(self.h, self.h1)

    def parmod_dim_via(self, projection: int) -> int:
        if projection == 1:
            return self.theta1_target.dim + self.theta1_fiber_dim
        if projection == 2:
            return self.theta2_target.dim + self.theta2_fiber_dim
        raise InvalidInput("projection must be 1 or 2")


def make_hecke(g: int, h1: int, h: int) -> HeckeDescriptor:
    check_genus(g)
    if h < 1 or h1 < 1:
        raise InvalidInput(f"h and h1 must be positive, got h={h}, h1={h1}")
    if h > h1:
        raise InvalidInput(f"Hecke correspondence needs h <= h1, got h={h}, h1={h1}")
    t1 = moduli(g, BundleType(h1, 0))
    t2 = moduli(g, BundleType(h1, -h))
    fib = grassmannian_dim(h, h1)
    return HeckeDescriptor(g, h1, h, gcd(h1, h), t1, t2, fib, h1 * h1 * (g - 1) + 1 + fib)


def hecke_brauer_targets(d: HeckeDescriptor):
    """Types of the two target spaces with their representing-algebra dims.

    Returns ``((type1, dim1), (type2, dim2))`` for M(h1, 0) and M(h1, -h).
    """
    if d.h1 % d.h:
        raise InvalidInput(f"h={d.h} must divide h1={d.h1} (m={d.m} != h)")
    t1, t2 = d.theta1_target.type, d.theta2_target.type
    return (t1, gcd_type(t1) ** 2), (t2, gcd_type(t2) ** 2)
