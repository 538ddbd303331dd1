"""Exact bookkeeping for the birational descent M(r,d) -> M(h,0) of moduli of
stable bundles on a curve: descent chains, Hecke steps, the fibre-dimension
ledger of the composite map, Brauer-class transport certificates and the
parameter-count inequalities for generic maps between generic bundles.
"""

__version__ = "0.1.0"

from .brauer import ClassExpr, DiagramEdge, EdgeKind, rep_algebra_dim, transport, verify_main, weight_class
from .core import BundleType, euler_chi, gcd_type, moduli, moduli_dim
from .descent import descent_chain, descent_step, kernel_type, scan_beta, solve_beta
from .errors import GenusError, InvalidInput, InvariantViolation
from .genericity import HirschConfig, classify, enumerate_configs
from .hecke import hecke_brauer_targets, make_hecke
from .mu import affine_dim, compose_mu, fixed_det_report
