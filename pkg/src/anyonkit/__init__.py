"""Fusion rings, anyon models and braid-closure knot invariants.

The package is organized bottom-up:

* :mod:`~anyonkit.fusion_ring` -- integer fusion algebra and its axioms.
* :mod:`~anyonkit.mtc` -- F/R/twist data and every coherence check.
* :mod:`~anyonkit.fusion_space` -- fusion-tree bases and braid generators.
* :mod:`~anyonkit.braid` -- braid words, evaluation, knot invariants,
  brute-force compilation.
* :mod:`~anyonkit.models` -- built-in models and the JSON file format.
* :mod:`~anyonkit.cli` -- the ``anyonkit`` command-line tool.
"""

from .errors import (AnyonkitError, DataError, InputError, NumericError, ParseError,
                     SchemaError)
from .fusion_ring import (AxiomCheck, FusionRing, Label, RingReport, fp_dimensions,
                          fuse, power_decompose, structure_problems, validate_ring)
from .mtc import (AnyonModel, CheckReport, FSymbolTable, RSymbolTable, SMatrix,
                  all_checks, check_hexagon, check_modularity, check_pentagon,
                  check_ribbon, check_triangle, check_unitarity, f_block, f_channels,
                  quantum_trace, s_matrix)
from .fusion_space import FusionBasis, braid_generator, enumerate_basis, f_matrix
from .braid import (BraidWord, KnotInvariantResult, closure_invariant, compile_unitary,
                    evaluate, parse_braid)
from .models import (BUILTIN_NAMES, builtin, load_model, model_from_dict, model_to_dict,
                     save_model)

__version__ = '0.1.0'

__all__ = [
    'AnyonkitError', 'DataError', 'InputError', 'NumericError', 'ParseError',
    'SchemaError',
    'AxiomCheck', 'FusionRing', 'Label', 'RingReport', 'fp_dimensions', 'fuse',
    'power_decompose', 'structure_problems', 'validate_ring',
    'AnyonModel', 'CheckReport', 'FSymbolTable', 'RSymbolTable', 'SMatrix',
    'all_checks', 'check_hexagon', 'check_modularity', 'check_pentagon',
    'check_ribbon', 'check_triangle', 'check_unitarity', 'f_block', 'f_channels',
    'quantum_trace', 's_matrix',
    'FusionBasis', 'braid_generator', 'enumerate_basis', 'f_matrix',
    'BraidWord', 'KnotInvariantResult', 'closure_invariant', 'compile_unitary',
    'evaluate', 'parse_braid',
    'BUILTIN_NAMES', 'builtin', 'load_model', 'model_from_dict', 'model_to_dict',
    'save_model',
    '__version__',
]
