"""Numerical ranges of rectangular matrices."""

from ._nrange import (
    DomainError,
    InputError,
    IoError,
    OutOfRangeError,
    ParseError,
    Region,
    boundary_witness,
    find_witness,
    fov_boundary,
    fov_region,
    mc_rect_sup,
    phi_k_contains,
    phi_k_region,
    power_sigma_max,
    rank_k_regime,
    singular_values,
    vector_ellipse,
    verify,
    w_disc,
    w_higher,
    w_lower,
    wnorm_disc,
)

__version__ = "0.3.0"
