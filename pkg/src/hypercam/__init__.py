"""Smooth, efficient, interruptible camera zooming and panning.

Camera views live in the Poincare upper half-space; animation is causal
filtering of a target-view signal along hyperbolic geodesics.
"""

from .geometry import (
    DegenerateGeodesicError,
    HPoint,
    HVector,
    clipvec,
    covariant_derivative,
    dist,
    exp_map,
    geo,
    gerp,
    hnorm,
    log_map,
    transport,
    zero_vector,
)
from .viewspace import (
    UwParams,
    Viewport,
    camera_from_span,
    hyperbolic_dist_from_uw,
    pseudosphere,
    rho_from_theta,
    screen_point,
    theta_from_rho,
    uw_dist_from_hyperbolic,
    v_to_w,
    w_to_v,
    world_point,
)
from .trajectory import (
    Trajectory,
    TrajectoryFormatError,
    read_trajectory_csv,
    write_trajectory_csv,
)
from .filters import (
    ClippedOnePole,
    EasingConfig,
    FilterConfig,
    FilterStabilityWarning,
    OnePole,
    SampledSignal,
    StageState,
    StepSignal,
    TwoPole,
    cascade_step,
    clipped_one_pole_step,
    clipped_two_pole_step,
    constant_speed_eval,
    cosine_easing,
    easing_eval,
    init_state,
    integrate_ct,
    one_pole_step,
    run_constant_speed,
    run_easing,
    run_filter,
    run_filter_stages,
    two_pole_step,
)
from .diagrams import (
    DiagramConfig,
    Pathline,
    PathlineSet,
    discontinuity_scan,
    grad_mag,
    pathline_membership,
    pathlines,
    pow2ceil,
    render_worldscreen_svg,
    rms_flow,
    rms_flow_series,
    screen_bounds_series,
    tracked_screen_series,
    velocity_jumps,
)
from .scenarios import (
    BUILTIN_SCENARIOS,
    Scenario,
    ScenarioError,
    default_filter_config,
    load_filter_config,
    load_scenario,
    parse_filter_config,
    parse_scenario,
    two_interruption_scenario,
    zoom_out_in_scenario,
)

__version__ = "0.1.0"
