"""Integer arithmetic on bundle types (rank, degree) over a curve of genus g.

Python integers are unbounded, so none of the functions here can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import GenusError, InvalidInput

__all__ = [
    "BundleType",
    "ModuliDescriptor",
    "check_genus",
    "euler_chi",
    "gcd_type",
    "moduli_dim",
    "moduli",
]


def check_genus(g) -> int:
    if isinstance(g, bool) or not isinstance(g, int):
        raise InvalidInput(f"genus must be an integer, got {g!r}")
    if g < 2:
        raise GenusError(f"genus must satisfy g >= 2, got g={g}")
    return g


@dataclass(frozen=True, order=True)
class BundleType:
    """A type (rank, degree).

    ``BundleType(r, d)`` requires ``r >= 1``.  Formal vectors with arbitrary
    rank, used for bilinearity checks, are built with :meth:`formal`.
    """

    rank: int
    degree: int

    def __post_init__(self):
        if not isinstance(self.rank, int) or not isinstance(self.degree, int):
            raise InvalidInput(f"rank and degree must be integers: {self.rank!r}, {self.degree!r}")

    @classmethod
    def of(cls, rank: int, degree: int) -> BundleType:
        if rank < 1:
            raise InvalidInput(f"rank must be >= 1, got {rank}")
        return cls(rank, degree)

    @classmethod
    def formal(cls, rank: int, degree: int) -> BundleType:
        return cls(rank, degree)

    @property
    def h(self) -> int:
        return gcd_type(self)

    def __add__(self, other: BundleType) -> BundleType:
        return BundleType(self.rank + other.rank, self.degree + other.degree)

    def __sub__(self, other: BundleType) -> BundleType:
        return BundleType(self.rank - other.rank, self.degree - other.degree)

    def __rmul__(self, k: int) -> BundleType:
        return BundleType(k * self.rank, k * self.degree)

    def __neg__(self) -> BundleType:
        return BundleType(-self.rank, -self.degree)

    def as_list(self) -> list[int]:
        return [self.rank, self.degree]

    def __str__(self) -> str:
        return f"({self.rank},{self.degree})"


def _as_type(t) -> BundleType:
    if isinstance(t, BundleType):
        return t
    r, d = t
    return BundleType(r, d)


def euler_chi(beta, alpha, g: int) -> int:
    """Riemann-Roch Euler form chi(beta, alpha) = hom - ext.

    With beta = (r_b, d_b) as source and alpha = (r_a, d_a) as target::

        chi = r_b*d_a - r_a*d_b - r_a*r_b*(g-1)

    Accepts formal types of any rank; the form is bilinear.
    """
    b, a = _as_type(beta), _as_type(alpha)
    return b.rank * a.degree - a.rank * b.degree - a.rank * b.rank * (g - 1)


def gcd_type(t) -> int:
    """Positive gcd of rank and degree, with gcd(r, 0) = r."""
    t = _as_type(t)
    if t.rank < 1:
        raise InvalidInput(f"gcd_type needs rank >= 1, got {t}")
    return gcd(t.rank, t.degree)


@dataclass(frozen=True)
class ModuliDescriptor:
    genus: int
    type: BundleType
    h: int
    dim: int

    def to_dict(self) -> dict:
        return {"rank": self.type.rank, "degree": self.type.degree, "h": self.h, "dim": self.dim}


def moduli(g: int, t) -> ModuliDescriptor:
    """Descriptor of the moduli space of stable bundles of type ``t``."""
    check_genus(g)
    t = _as_type(t)
    if t.rank < 1:
        raise InvalidInput(f"rank must be >= 1, got {t.rank}")
    return ModuliDescriptor(g, t, gcd_type(t), t.rank * t.rank * (g - 1) + 1)


def moduli_dim(m) -> int:
    """rank^2 (g - 1) + 1.  Accepts a descriptor or a ``(g, type)`` pair."""
    if isinstance(m, ModuliDescriptor):
        return m.type.rank ** 2 * (m.genus - 1) + 1
    g, t = m
    return moduli(g, t).dim
