"""Parameter counting for generic maps phi: F -> E between generic bundles.

A map is split into kernel K, image I, torsion T (degree d_T) of the
cokernel Q, torsion-free part Q' = Q/T and the preimage I' of T in E::

    0 -> K -> F -> I -> 0
    0 -> I -> E -> Q -> 0
    0 -> I' -> E -> Q' -> 0

Comparing parameter counts bounds ext(F, E) above; for configurations that
can occur generically the bound forces ext(F, E) = 0, maximal rank, and
torsion-free cokernel unless the ranks agree.  Everything here is exact
integer or Fraction arithmetic.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import BundleType, _as_type, check_genus, euler_chi
from .errors import InvalidInput

__all__ = [
    "HirschConfig",
    "Classification",
    "GenericityVerdict",
    "WindowClipWarning",
    "p0",
    "p1",
    "ext_upper_bound",
    "necessary_conditions",
    "final_upper_bound",
    "check_implication",
    "torsion_identity",
    "classify",
    "dk_window",
    "enumerate_configs",
]

STABILITY_ASSUMPTIONS = ("E and F stable", "hom(I,K) = 0", "hom(Q',I') = 0")


@dataclass(frozen=True)
class HirschConfig:
    g: int
    F: BundleType
    E: BundleType
    r_K: int
    d_K: int
    d_T: int

    def __post_init__(self):
        check_genus(self.g)
        if self.r_K < 0:
            raise InvalidInput("r_K must be >= 0")
        if self.r_K == 0 and self.d_K != 0:
            raise InvalidInput("a rank-0 kernel of a map of bundles is zero; d_K must be 0")
        if self.r_I < 1:
            raise InvalidInput(f"image rank r_I = {self.r_I} must be >= 1 (phi nonzero)")
        if self.r_Q < 0:
            raise InvalidInput(f"cokernel rank r_Q = {self.r_Q} is negative")
        if self.d_T < 0:
            raise InvalidInput("d_T must be >= 0")
        if self.r_Q == 0 and self.d_T != self.Q.degree:
            raise InvalidInput("with r_Q = 0 the cokernel is all torsion: d_T must equal d_Q")

    @property
    def K(self) -> BundleType:
        return BundleType(self.r_K, self.d_K)

    @property
    def I(self) -> BundleType:
        return self.F - self.K

    @property
    def Q(self) -> BundleType:
        return self.E - self.I

    @property
    def Qp(self) -> BundleType:
        q = self.Q
        return BundleType(q.rank, q.degree - self.d_T)

    @property
    def Ip(self) -> BundleType:
        i = self.I
        return BundleType(i.rank, i.degree + self.d_T)

    @property
    def r_I(self) -> int:
        return self.F.rank - self.r_K

    @property
    def r_Q(self) -> int:
        return self.E.rank - self.r_I

    @property
    def assumptions(self) -> tuple[str, ...]:
        return STABILITY_ASSUMPTIONS

    def chi(self, a, b) -> int:
        return euler_chi(a, b, self.g)

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "F": self.F.as_list(),
            "E": self.E.as_list(),
            "r_K": self.r_K,
            "d_K": self.d_K,
            "d_T": self.d_T,
            "I": self.I.as_list(),
            "Q": self.Q.as_list(),
        }


class Classification(str, Enum):
    CONSISTENT_GENERIC = "ConsistentGeneric"
    GENERICALLY_IMPOSSIBLE = "GenericallyImpossible"
    EQUAL_RANK_TORSION_ALLOWED = "EqualRankTorsionAllowed"
    FAILS_NECESSARY = "FailsNecessary"


@dataclass(frozen=True)
class GenericityVerdict:
    passes_necessary: bool
    ext_upper: int
    final_upper: Fraction
    classification: Classification
    implication: bool | None
    torsion_identity: bool

    def to_dict(self) -> dict:
        return {
            "passes_necessary": self.passes_necessary,
            "ext_upper": self.ext_upper,
            "final_upper": str(self.final_upper),
            "classification": self.classification.value,
            "implication": self.implication,
            "torsion_identity": self.torsion_identity,
        }


def p0(F, E, g: int, hom_FE: int) -> int:
    """Parameters of a triple (F, E, [phi]); ``hom_FE`` is an input."""
    if hom_FE < 1:
        raise InvalidInput("hom(F, E) must be >= 1 for a nonzero phi to exist")
    F, E = _as_type(F), _as_type(E)
    return 1 - euler_chi(F, F, g) + 1 - euler_chi(E, E, g) + hom_FE - 1


def p1(c: HirschConfig) -> int:
    """Upper bound on parameters of a configuration, in simplified form.

    1 - chi(F,K) - chi(Q,E) - chi(I,I) - r_Q d_T.  Terms involving rank-0
    K or Q are evaluated by the same bilinear formula.
    """
    return 1 - c.chi(c.F, c.K) - c.chi(c.Q, c.E) - c.chi(c.I, c.I) - c.r_Q * c.d_T


def p1_unsimplified(c: HirschConfig) -> int:
    """Parameter count before applying stability and bilinearity."""
    ext_IK = -c.chi(c.I, c.K)
    ext_QI = -c.chi(c.Qp, c.Ip)
    return (
        1 - c.chi(c.K, c.K)
        + 1 - c.chi(c.I, c.I) + c.r_I * c.d_T
        + 1 - c.chi(c.Qp, c.Qp)
        + ext_IK - 1
        + ext_QI - 1
    )


def ext_upper_bound(c: HirschConfig) -> int:
    return -c.chi(c.K, c.Q) - c.r_Q * c.d_T


def necessary_conditions(c: HirschConfig) -> bool:
    """chi(K, I) >= 0 and chi(I', Q') >= 0."""
    return c.chi(c.K, c.I) >= 0 and c.chi(c.Ip, c.Qp) >= 0


def final_upper_bound(c: HirschConfig) -> Fraction:
    return -c.r_K * c.r_Q * (c.g - 1) - c.d_T * (c.r_Q + Fraction(c.r_K * c.E.rank, c.r_I))


def check_implication(c: HirschConfig) -> bool:
    """The necessary conditions imply chi(K,Q) >= r_K r_Q (g-1) + d_T r_K r_E / r_I.

    Compared with the denominator r_I cleared.
    """
    if not necessary_conditions(c):
        raise InvalidInput("check_implication requires the necessary conditions to hold")
    lhs = c.r_I * c.chi(c.K, c.Q)
    rhs = c.r_I * c.r_K * c.r_Q * (c.g - 1) + c.d_T * c.r_K * c.E.rank
    return lhs >= rhs


def torsion_identity(c: HirschConfig) -> bool:
    """chi(Q', I') == chi(Q, I) + r_E d_T."""
    return c.chi(c.Qp, c.Ip) == c.chi(c.Q, c.I) + c.E.rank * c.d_T


def classify(c: HirschConfig) -> GenericityVerdict:
    ok = necessary_conditions(c)
    final = final_upper_bound(c)
    implication = check_implication(c) if ok else None
    if not ok:
        cls = Classification.FAILS_NECESSARY
    elif final < 0:
        cls = Classification.GENERICALLY_IMPOSSIBLE
    elif c.d_T > 0:
        # final >= 0 with d_T > 0 leaves only r_K = r_Q = 0, hence r_E = r_F
        cls = Classification.EQUAL_RANK_TORSION_ALLOWED
    else:
        cls = Classification.CONSISTENT_GENERIC
    return GenericityVerdict(ok, ext_upper_bound(c), final, cls, implication, torsion_identity(c))


class WindowClipWarning(UserWarning):
    pass


def dk_window(g: int, F: BundleType, E: BundleType, r_K: int) -> tuple[int, int]:
    """Range of d_K outside which the necessary conditions cannot hold.

    The upper end comes from chi(K, I) >= 0.  The lower end comes from
    chi(I', Q') >= 0 at d_T = 0 (larger d_T only tightens it) or, when
    r_Q = 0, from d_Q >= 0.  The range may be empty (lo > hi).
    """
    if r_K == 0:
        return 0, 0
    r_F, r_E = F.rank, E.rank
    r_I = r_F - r_K
    r_Q = r_E - r_I
    hi = (r_K * F.degree - r_K * r_I * (g - 1)) // r_F
    if r_Q > 0:
        max_dI = (r_I * E.degree - r_I * r_Q * (g - 1)) // r_E
    else:
        max_dI = E.degree
    return F.degree - max_dI, hi


def enumerate_configs(g: int, F, E, max_dT: int = 0, window=None, margin: int = 1):
    """Every configuration for (F, E) in the d_K window, classified.

    For each admissible r_K the d_K range is :func:`dk_window` widened by
    ``margin`` on both sides, so a band of configurations failing the
    necessary conditions is included too.  An explicit ``window=(lo, hi)``
    replaces it; if that clips values where the necessary conditions may
    hold, a :class:`WindowClipWarning` is issued.  With r_Q = 0 the torsion
    degree is forced to d_Q, so such configurations appear only when
    0 <= d_Q <= max_dT.

    Results are in lexicographic (r_K, d_K, d_T) order.
    """
    check_genus(g)
    F, E = _as_type(F), _as_type(E)
    if F.rank < 1 or E.rank < 1:
        raise InvalidInput("F and E need rank >= 1")
    if max_dT < 0:
        raise InvalidInput("max_dT must be >= 0")
    out = []
    for r_K in range(max(0, F.rank - E.rank), F.rank):
        lo, hi = dk_window(g, F, E, r_K)
        if r_K == 0:
            dks = range(0, 1)
        elif window is None:
            dks = range(min(lo, hi) - margin, max(lo, hi) + margin + 1)
        else:
            wlo, whi = window
            if lo <= hi and (lo < wlo or hi > whi):
                warnings.warn(
                    f"d_K window [{wlo},{whi}] clips [{lo},{hi}] for r_K={r_K}",
                    WindowClipWarning,
                    stacklevel=2,
                )
            dks = range(wlo, whi + 1)
        r_I = F.rank - r_K
        r_Q = E.rank - r_I
        for d_K in dks:
            if r_Q == 0:
                d_Q = E.degree - (F.degree - d_K)
                dts = [d_Q] if 0 <= d_Q <= max_dT else []
            else:
                dts = range(max_dT + 1)
            for d_T in dts:
                c = HirschConfig(g, F, E, r_K, d_K, d_T)
                out.append((c, classify(c)))
    return out
