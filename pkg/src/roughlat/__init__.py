"""Finite lattices with Galois connections, rough approximation operators, GC-frames,
and machine checks of their canonical and spatial representations."""

from roughlat.kernels import BACKEND
from roughlat.order import QuasiOrder, UpSetFamily, validate_quasiorder, upsets
from roughlat.lattice import FiniteLattice, lattice_from_order, lattice_from_family
from roughlat.galois import GaloisPair, left_adjoint_of, right_adjoint_of, validate_galois
from roughlat.rough import ApproximationSpace, approximation_space
from roughlat.frame import GCFrame, ComplexAlgebra, validate_gcframe, complex_algebra
from roughlat.canonical import canonical_frame, verify_embedding, verify_finite_iso
from roughlat.spatial import build_spatial_frame, verify_representation, frames_agree
from roughlat.generate import InstanceSpec

__version__ = "0.1.0"
