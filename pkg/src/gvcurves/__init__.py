"""Exact computation of degree-two GV invariants of local curves."""

from .assembly import FullResult, full_gv, nearby_gv
from .errors import GVError, MismatchError
from .gvbasis import GVSpectrum, compose_cosh, decompose_cosh, decompose_signed_sinh
from .gwside import bp_t2_coefficient, extract_gw_gv
from .higgs import euler_mhat, higgs_spectrum
from .homfly import homfly_t2, specialize_a0
from .localgv import SpectralType, hilb_series, local_gv
from .poly import LaurentPoly
from .strata import stratum_table

__version__ = "0.1.0"
