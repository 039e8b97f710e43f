"""Nonlinear resolvents of accretive generators on the unit disk.

Construct G_lambda = (Id + lambda f)^(-1) for f(z) = p(z) z with
Re p >= a >= 0 given by finite-atom data, evaluate the closed-form
distortion/accretivity/starlikeness bounds of that class, and verify every
bound by independent sampling oracles and exactly solvable cases.
"""

from .bounds import (
    BoundSet,
    OrderCertificate,
    OrderEstimate,
    accretivity_center_estimate,
    calc_order,
    composed_accretivity,
    distortion_at_critical_lambda,
    distortion_at_critical_lambda_simplified,
    distortion_bound,
    distortion_coefficients,
    distortion_curve,
    est1_bound,
    reciprocal_disk,
    region_boundary,
    resolvent_accretivity,
    rho_star,
    starlike_main_margin,
    starlike_order_from_rho,
    t_function,
    threshold_m1,
    threshold_m2,
)
from .exceptions import (
    ConfigError,
    DegenerateParameterError,
    DomainError,
    IntegrationError,
    NonConvergenceError,
    ResolventLabError,
)
from .herglotz import (
    Disk,
    GeneratorSpec,
    SampleConfig,
    constant_generator,
    eval_p,
    eval_p_prime,
    extremal_generator,
    harnack_bounds,
    load_spec,
    rotate_generator,
    sample_generator,
    save_spec,
    spec_from_dict,
    spec_to_dict,
    value_disk,
)
from .resolvent import (
    GridSolution,
    ResolventSolution,
    iterate_resolvent,
    solve_resolvent,
    solve_resolvent_grid,
    solve_slice,
)
from .semigroup import (
    ProductGap,
    SqueezeReport,
    Trajectory,
    estimate_accretivity_floor,
    integrate,
    integrate_composed,
    ladder_gaps,
    product_formula,
    squeeze_check,
)
from .starlike import (
    OrderScan,
    StarlikeSample,
    TheoremComparison,
    empirical_order,
    starlike_functional,
    starlike_functional_fd,
    starlike_functional_grid,
    theorem_vs_empirical,
)
from .verify import (
    SUITE_NAMES,
    SuiteConfig,
    VerificationReport,
    Violation,
    default_seed,
    run_suite,
)

__version__ = "0.1.0"
