"""Exact computations with Hopf algebras, entwining structures and their witnesses.

Structures are given by structure constants over an exact field (Q, GF(p),
rational functions over GF(p), or a simple extension of one of these).
Existence questions such as "does a normalized integral exist" become affine
linear systems; solvers return an explicit, already verified witness or
``None``.
"""

from .errors import *  # noqa: F401,F403
from .exactfield import QQ, GF, FieldSpec, field_construct
from .linalg import Matrix, kron, compose, rref, solve_affine, canonical_witness
from .strucalg import (
    Algebra, Coalgebra, HopfAlgebra, Module, Comodule, check_structure, build_example,
    group_algebra, sweedler_h4, dual_of, cyclic_group_table, S3_TABLE, hom_space,
    coaction_retraction,
)
from .entwine import (
    EntwiningStructure, DoiKoppinenDatum, EntwinedModule, check_entwining,
    check_entwined_module, entwining_from_doi_koppinen, entwining_yetter_drinfeld,
    entwining_relative_hopf, entwining_lc, flip_entwining, cofree_induction, unit_splits,
)
from .witness import (
    Witness, verify_witness, witness_transport, solve_normalized_integral,
    solve_dual_normalized_integral, solve_relative_casimir, solve_bimodule_retraction,
    solve_theta, solve_cocasimir, solve_total_integral, solve_augmented_cointegral,
    solve_quantum_integral, frobenius_ring_tools, frobenius_entwining_tools,
)
from .deform import PrimitiveExtensionData, field_ext_deform, deform_to_colinear, maschke_split
from .catalog import catalog_run

__version__ = "0.1.0"
