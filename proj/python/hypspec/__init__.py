"""First Laplace eigenvalues of hyperbolic surfaces with pinched geodesics.

Thin wrapper over the compiled extension; see the project README for the
command-line interface and the C++ API.
"""

try:
    from . import _hypspec as _core  # installed package layout
except ImportError:  # pragma: no cover - build-tree layout
    import _hypspec as _core

collar = _core.collar
reduced = _core.reduced
hexagon = _core.hexagon
qdiff = _core.qdiff

genus2_config_json = _core.genus2_config_json
genus3_chain_config_json = _core.genus3_chain_config_json
validate_config = _core.validate_config
solve = _core.solve
cylinder_oracle = _core.cylinder_oracle

__all__ = [
    "collar",
    "reduced",
    "hexagon",
    "qdiff",
    "genus2_config_json",
    "genus3_chain_config_json",
    "validate_config",
    "solve",
    "cylinder_oracle",
]
