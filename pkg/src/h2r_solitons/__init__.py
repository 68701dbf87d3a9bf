"""Numerical rotational translating solitons of mean curvature flow in H^2 x R."""

from .asymptotics import (MODEL_OFFSET, asymptotic_offset, lower_bound, measured_thresholds,
                          model_f, model_phi, model_psi, psi, solve_phi, upper_bound)
from .builders import (BowlGraph, Catenoid, bowl_graph, build_bowl, build_catenoid,
                       c1_distance_to_bowl, solve_rotational_dirichlet, tau, vertical_plane)
from .config import DEFAULT_CONFIG, INV_SQRT5, TIGHT_CONFIG, IntegratorConfig
from .hyperbolic import (DomainError, HyperboloidPoint, PoincarePoint, TangentVector,
                         conformal_factor, dist_to_origin, to_hyperboloid, to_poincare)
from .mesh import RevolutionMesh, mesh_revolution
from .phase import Region, classify, equilibrium_scan, gamma, portrait, predict_monotonicity
from .profile_ode import (AxisSingularityError, ContractError, EventKind, IntegrationError,
                          OrbitSample, ProfileState, SolitonProfile, integrate, rhs_arclength,
                          rhs_phase, switch_epsilon)
from .robustness import axis_radius_sweep, reintegration_check
from .verification import (height_extrema_census, laplacian_height_identity, principal_curvatures,
                           soliton_residual, verify_profile, weighted_and_conformal_H,
                           weighted_area_first_variation)

__version__ = "0.1.0"
