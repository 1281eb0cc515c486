"""Exact computer algebra for the restricted quantum group at a 2p-th root
of unity and the graph-algebra tower built on it."""

from .cyclo import CyclotomicField, CycNum, field
from .linalg import ExactMatrix
from .uq_algebra import (AlgElem, DualForm, UqAlgebra, algebra,
                         mu_left, mu_right)
from .tensor import TensorElem
from .uq_modules import fundamental, proj_module, simple_module
from .ribbon import (drinfeld_map, drinfeld_u, factorizability_rank,
                     m_element, r_matrix_ext, r_prime, ribbon_v,
                     ribbon_v_inv, ribbon_value)
from .center_slf import CenterBasis, CoordVec, GtaBasis, center_basis, gta_basis
from .handle_rep import (BlockOp, HdOperator, lgn_op, matrix_op,
                         quantum_trace, restrict_to_slf)
from .loop_wilson import (LoopWord, loop_a, loop_b, parse_loop, wilson_op)
from .mcg_sl2z import (decompose_rep, genus_twist_op, lm_operators,
                       sl2z_relations, theta1, xi_value)
from .skein import (TLElem, composition_series, iso_F, jones_wenzl,
                    rho_torus, slf_skein_ops)
from .suites import SUITES, SUITE_NAMES
from .cli import RunConfig, export_tables, run

__all__ = [
    "CyclotomicField", "CycNum", "field", "ExactMatrix",
    "AlgElem", "DualForm", "UqAlgebra", "algebra", "mu_left", "mu_right",
    "TensorElem", "fundamental", "proj_module", "simple_module",
    "drinfeld_map", "drinfeld_u", "factorizability_rank", "m_element",
    "r_matrix_ext", "r_prime", "ribbon_v", "ribbon_v_inv", "ribbon_value",
    "CenterBasis", "CoordVec", "GtaBasis", "center_basis", "gta_basis",
    "BlockOp", "HdOperator", "lgn_op", "matrix_op", "quantum_trace",
    "restrict_to_slf",
    "LoopWord", "loop_a", "loop_b", "parse_loop", "wilson_op",
    "decompose_rep", "genus_twist_op", "lm_operators", "sl2z_relations",
    "theta1", "xi_value",
    "TLElem", "composition_series", "iso_F", "jones_wenzl", "rho_torus",
    "slf_skein_ops",
    "SUITES", "SUITE_NAMES", "RunConfig", "export_tables", "run",
]
__version__ = "0.1.0"
