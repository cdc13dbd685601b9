"""Codimension-one decompositions of homogeneous forms.

Thin python surface over the C++ core: closed-form invariants, randomized
verification oracles, and the decomposition pipeline.  Big integers are
returned as decimal strings; convert with int() as needed.
"""

try:
    from . import _chowforms as _core
except ImportError:  # build-tree layout: extension sits next to the package
    import _chowforms as _core

__all__ = [
    "ah_rank",
    "chow_degree",
    "chow_dim",
    "decompose_json",
    "is_defective",
    "profile",
    "sexp",
    "smin",
    "smin_oracle",
    "sstar",
    "synth_instance_json",
    "table",
    "verify_chow_degree",
    "verify_chow_tangent",
    "verify_roundtrip",
    "verify_smoothness_case",
    "verify_terracini",
    "vhat_dim",
    "vsh_degree",
    "vsh_dim",
    "vsh_point_count",
]

for _name in __all__:
    globals()[_name] = getattr(_core, _name)
del _name
