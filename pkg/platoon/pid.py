"""
Discrete PID with clamped-integrator anti-windup.

    I  = clamp(I + e*dt, +-integral_max)
    D  = (e - e_prev)/dt, 0 on the first call
    u  = clamp(kp*e + ki*I + kd*D, out_min, out_max)

derivative_tau > 0 adds a first-order low-pass on D:
    D_f = (tau*D_f_prev + dt*D) / (tau + dt)
"""

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class PidGains:
    kp: float = 0.0
    ki: float = 0.0
    kd: float = 0.0
    out_min: float = -1.0
    out_max: float = 1.0
    integral_max: float = 5.0
    derivative_tau: float = 0.0

    def __post_init__(self):
        if not self.out_min < self.out_max:
            raise ValueError(f"out_min ({self.out_min}) must be < out_max ({self.out_max})")
        if self.integral_max <= 0:
            raise ValueError(f"integral_max must be positive, got {self.integral_max}")
        if self.derivative_tau < 0:
            raise ValueError(f"derivative_tau must be >= 0, got {self.derivative_tau}")


@dataclass(frozen=True)
class PidState:
    integral: float = 0.0
    prev_error: float = 0.0
    derivative: float = 0.0
    initialized: bool = False


def _clamp(value: float, lo: float, hi: float) -> float:
    return lo if value < lo else hi if value > hi else value


def pid_step(gains: PidGains, state: PidState, error: float, dt: float) -> Tuple[float, PidState]:
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt}")
    integral = _clamp(state.integral + error * dt, -gains.integral_max, gains.integral_max)
    if state.initialized:
        raw = (error - state.prev_error) / dt
        if gains.derivative_tau > 0:
            derivative = (gains.derivative_tau * state.derivative + dt * raw) / (gains.derivative_tau + dt)
        else:
            derivative = raw
    else:
        derivative = 0.0
    output = gains.kp * error + gains.ki * integral + gains.kd * derivative
    output = _clamp(output, gains.out_min, gains.out_max)
    return output, PidState(integral=integral, prev_error=error, derivative=derivative, initialized=True)
