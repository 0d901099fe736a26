# Infrastructure:
from liepyx.polycore import Polynomial
from liepyx.rootdata import RootSystem, LieAlgebra, GVector, build_root_system, build_lie_algebra, cartan_matrix
from liepyx.kostant import KostantFrame, build_frame, exponent_multiplicities
from liepyx.termgen import TermKey, TermLists, generate_terms
from liepyx.explanations import ExplanationLogger, ConsoleExplanationLogger, StringsExplanationLogger, FilesExplanationLogger
from liepyx.errors import *

# Computation:
from liepyx.engine import ValueTable, InvariantPolynomial, compute_valuedata, assemble
from liepyx.adaptors import compute_invariant, compute_all_invariants
from liepyx.verify import verify_invariant, VerificationReport, oracle_type_a
