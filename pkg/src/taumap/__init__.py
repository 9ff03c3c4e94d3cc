"""tau-maps of monomial bound quiver algebras.

Exact computations of Auslander-Reiten translates over ``kQ/I`` with
``I`` generated by paths, Nakayama closed forms, and a decision procedure
for integer-linear maps on the Grothendieck group that realize ``tau``.
"""

from .algebra import AlgebraError, MonomialAlgebra, Path, new_monomial_algebra
from .artranslation import five_term_check, tau, tau_inverse
from .fileformat import emit_algebra_file, parse_algebra_file
from .k0 import (
    build_nakayama_tau_map,
    coxeter_matrix,
    decide_tau_map,
    dim_vector,
    invert_to_tau_inverse_map,
    permutation_check,
    tau_map_feasible,
)
from .nakayama import kupisch_series, nakayama_algebra
from .quiver import Quiver
from .representation import Representation, ext_quiver, injective, projective, simple

__version__ = "0.1.0"
