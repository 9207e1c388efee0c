"""Energy pairings, canonical heights and common preperiodic points for
quadratic polynomials z^2 + c with rational parameters.

Rationals are passed as strings like "-21/16"; exactness is preserved
inside the extension module.
"""

from ._quaddyn import (
    adelic_pairing,
    arch_energy_mc,
    audit_b,
    audit_delta,
    canonical_height,
    common_preper,
    constants,
    energy_circle_oracle,
    equidist_upper,
    escape_rate,
    escape_rate_padic,
    filled_julia_disjoint_at_p,
    h_L,
    is_preperiodic,
    julia_classify,
    local_energy,
    padic_valuation,
    rational_roots,
    weil_height,
    weil_height2,
)

__all__ = [
    "adelic_pairing",
    "arch_energy_mc",
    "audit_b",
    "audit_delta",
    "canonical_height",
    "common_preper",
    "constants",
    "energy_circle_oracle",
    "equidist_upper",
    "escape_rate",
    "escape_rate_padic",
    "filled_julia_disjoint_at_p",
    "h_L",
    "is_preperiodic",
    "julia_classify",
    "local_energy",
    "padic_valuation",
    "rational_roots",
    "weil_height",
    "weil_height2",
]
