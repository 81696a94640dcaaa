"""Independent reference computations and shared hypothesis strategies.

Everything here is deliberately written from the closed-form definitions,
not by calling back into the library code under test.
"""

import math

import numpy as np
from hypothesis import strategies as st

from hypercam import HPoint, HVector


def dist_oracle(x: HPoint, y: HPoint) -> float:
    """Hyperbolic distance via the acosh chord formula."""
    du = y.u - x.u
    dv = y.v - x.v
    return math.acosh(1.0 + (float(du @ du) + dv * dv) / (2.0 * x.v * y.v))


def dist_oracle_bulk(u0, v0, u1, v1) -> np.ndarray:
    """Vectorized acosh chord formula; u arrays are (m, dim)."""
    duu = np.sum((u1 - u0) ** 2, axis=1)
    dv = v1 - v0
    return np.arccosh(1.0 + (duu + dv * dv) / (2.0 * v0 * v1))


def scalar_one_pole(q0: float, q_target: float, b: float, steps: int) -> list:
    out = [q0]
    q = q0
    for _ in range(steps):
        q = q + b * (q_target - q)
        out.append(q)
    return out


def scalar_cascade(q0: float, q_target: float, b: float, stages: int, steps: int) -> list:
    state = [q0] * stages
    out = [q0]
    for _ in range(steps):
        inp = q_target
        for k in range(stages):
            state[k] = state[k] + b * (inp - state[k])
            inp = state[k]
        out.append(state[-1])
    return out


def scalar_clipped_one_pole(
    q0: float, q_target: float, alpha: float, c: float, period: float, steps: int
) -> list:
    out = [q0]
    q = q0
    for _ in range(steps):
        gap = q_target - q
        step = period * min(c, alpha * abs(gap))
        q = q + math.copysign(step, gap) if gap != 0.0 else q
        out.append(q)
    return out


def scalar_two_pole(
    q0: float, q_target: float, omega0: float, zeta: float, period: float, steps: int
) -> list:
    out = [q0]
    q, qdot = q0, 0.0
    for _ in range(steps):
        qdot = (1.0 - 2.0 * period * zeta * omega0) * qdot + period * omega0 * omega0 * (
            q_target - q
        )
        q = q + period * qdot
        out.append(q)
    return out


def finite_units(lo: float, hi: float):
    return st.floats(lo, hi, allow_nan=False, allow_infinity=False)


def altitudes(lo: float = 0.05, hi: float = 20.0):
    return finite_units(math.log(lo), math.log(hi)).map(math.exp)


def points(dim: int = 1, u_lim: float = 50.0, v_lo: float = 0.05, v_hi: float = 20.0):
    return st.builds(
        lambda u, v: HPoint(u, v),
        st.lists(finite_units(-u_lim, u_lim), min_size=dim, max_size=dim),
        altitudes(v_lo, v_hi),
    )


def vectors(dim: int = 1, comp_lim: float = 10.0, **point_kwargs):
    return st.builds(
        lambda p, du, dv: HVector(p, du, dv),
        points(dim, **point_kwargs),
        st.lists(finite_units(-comp_lim, comp_lim), min_size=dim, max_size=dim),
        finite_units(-comp_lim, comp_lim),
    )
