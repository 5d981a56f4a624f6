"""Representation zeta functions: censuses, local factors and Euler products."""

from ._core import (
    BudgetError,
    __version__,
    abscissa_estimate,
    ak_zeta,
    an_degrees,
    census_classes,
    census_zeta,
    centralizer_index,
    chain_product_value,
    chain_truncated_sum,
    divergence_scan,
    euler_partial_product,
    gamma_estimate,
    level_census,
    oracle_class_count,
    oracle_degrees,
    orbit_dimension,
    riemann_zeta,
    root_datum,
    run_cli,
    sandwich_check,
    sl2_local_zeta,
    sn_degrees,
    suffix_converges,
    witten_census,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
