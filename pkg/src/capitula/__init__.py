"""Capitulation of 2-classes of Q(sqrt(p1 p2 q), i) in its unramified quadratic extensions."""

from .app222 import TypeLabel, classify_type, full_capitulation_check, is_cl222, kappa_222
from .capitulation import (capitulation_report, capitulation_witness, check_main_theorem,
                           genus_kernel_bound, kappa_K1, kappa_K2, kappa_K3, kappa_size,
                           resolve_K3_pairing)
from .classwords import ClassWord, RelationSet, in_span, relations_for, span_order
from .fsu import FsuDescriptor, fsu_k, fsu_K1, fsu_K2, fsu_K3
from .genus import GenusReport, genus_report, i_is_norm
from .intkernel import is_prime, is_square, isqrt, jacobi
from .pell import QuadraticUnit, fundamental_unit, unit_norm
from .pipeline import TripleReport, analyze_triple
from .squareclass import SquareClassPair, multiplier_is_square, square_class_pair, validate_lemma
from .triple import InvalidTriple, PrimeTriple

__version__ = "0.1.0"
