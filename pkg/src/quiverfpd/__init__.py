"""Frobenius-Perron dimension of module categories of radical-square-zero algebras."""
from .bricks import Brick, BrickList, Completeness, enumerate_bricks_oracle, enumerate_bricks_thin
from .fpd import FpdConfig, FpdReport, adjacency_matrix, closed_form_fpd, fpd, fpd_family
from .homology import Representation, ext1_dim, hom_dim, is_brick
from .linalg import RationalMatrix, kernel_basis, rank
from .quiver import BoundAlgebraSpec, FamilyKind, FamilySpec, generate_family, opposite, parse_quiver, strip_loops
from .spectral import Surd, spectral_radius

__version__ = "0.1.0"
