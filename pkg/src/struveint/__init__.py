"""struveint: modified Struve/Bessel kernels with exponential scaling, the
integral F(nu, beta, x) = int_0^x e^{-beta t} t^nu L_nu(t) dt by several
mutually checking routes, a machine-checkable catalog of its bounds, and a
harness that reproduces the published relative-error tables."""

from .errors import ConvergenceError, DomainError, ValidityError
from .scaled import ScaledReal
from .specfun import (
    SeriesResult,
    bessel_i,
    bessel_i_scaled,
    bessel_k,
    bessel_k_scaled,
    gamma_fn,
    log_gamma,
    lower_incomplete_gamma,
    pfq,
    struve_l,
    struve_l_scaled,
)
from .integrals import (
    F,
    G,
    IntegralSpec,
    QuadratureResult,
    integral_beta0,
    integral_beta1,
    integral_quad,
    integral_series,
)
from .bounds import (
    BoundSpec,
    Margin,
    Side,
    Target,
    a_factor,
    check,
    default_x_star,
    eval_bound,
    list_bounds,
    m_factor,
    margin_status,
    product_asymptote,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DomainError",
    "ValidityError",
    "ScaledReal",
    "SeriesResult",
    "gamma_fn",
    "log_gamma",
    "lower_incomplete_gamma",
    "pfq",
    "struve_l",
    "struve_l_scaled",
    "bessel_i",
    "bessel_i_scaled",
    "bessel_k",
    "bessel_k_scaled",
    "IntegralSpec",
    "QuadratureResult",
    "integral_quad",
    "integral_series",
    "integral_beta1",
    "integral_beta0",
    "F",
    "G",
    "BoundSpec",
    "Margin",
    "Side",
    "Target",
    "list_bounds",
    "eval_bound",
    "check",
    "margin_status",
    "m_factor",
    "a_factor",
    "default_x_star",
    "product_asymptote",
    "__version__",
]
