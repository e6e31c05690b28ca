"""Exact split octonions and their weight-zero Rota-Baxter operators."""

from .scalar import Q, GF, Scalar, Rationals, PrimeField, parse_field, arith
from .algebra import BASIS_NAMES, Octo, basis, octo, mul, unit, subalgebra
from .operator import (
    LinMap, check_rb, conjugate, fingerprint, scale, rank_kernel_image, bimodule_check,
)
from .maps import MapSpec, build_map, verify_map, ReductionScript, Step, run_script
from .catalog import CaseSpec, build_case, enumerate_catalog, expected_fingerprint
from .search import SearchSpec, OrbitStore, enumerate_rb, orbit_reduce, classify_run

__version__ = "0.1.0"
