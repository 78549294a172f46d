"""Boolean-type algebras on finite carriers, computed with semi-tensor products of logical matrices."""

from .algebra import (
    AlgebraFormatError,
    AlgebraReport,
    StructureTriple,
    emit_algebra,
    emit_catalog,
    parse_algebra,
    parse_catalog,
)
from .axioms import classify, classify_complement, is_bounded, is_distributive, is_lattice, pseudo_complement
from .config import OracleMismatch, oracle, set_oracle
from .enumeration import enumerate_btas, enumerate_complements, enumerate_lattices
from .morphism import Morphism, find_isomorphisms, is_bta_hom, is_lattice_hom, iso_classes, relabel
from .prodec import decompose, decompose_up_to_iso, is_decomposable, product
from .stp import LogicalMatrix, delta, identity, kron, parse_delta, power_reducing, stp, swap_matrix
from .unigen import eval_expr, generator_set, synthesize, unary_closure, unary_word

__version__ = "0.1.0"
