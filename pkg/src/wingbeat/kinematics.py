"""Wing-stroke kinematics: truncated Fourier series with analytic derivatives.

The stroke angle and the sectional rotation angle are represented as
truncated Fourier series of a common flapping frequency. Rotation is given
at a small number of spanwise stations; values in between follow by linear
interpolation, which models the passive spanwise twist of a membrane wing.

Sign convention: positive stroke rate marks the upstroke. The rotation
angle is measured between the chord and the upstroke direction, so the
geometric angle of attack equals the rotation angle on the upstroke and
its supplement on the downstroke.
"""

from dataclasses import dataclass, replace
from functools import cached_property
import math

import numpy as np


@dataclass(frozen=True)
class FourierSeries:
    """angle(t) = a0 + sum_n [ a_n cos(2 pi n f t) + b_n sin(2 pi n f t) ].

    Coefficients are in radians, ``frequency`` in Hz. ``eval`` returns the
    angle or its first/second analytic time derivative.
    """

    a0: float
    a: tuple
    b: tuple
    frequency: float

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("cosine and sine coefficient lists must have equal length")
        if self.frequency <= 0.0:
            raise ValueError("frequency must be positive")

    @property
    def n_harmonics(self):
        return len(self.a)

    @property
    def period(self):
        return 1.0 / self.frequency

    def eval(self, t, order=0):
        """Evaluate the series (order 0) or its time derivatives (1, 2)."""
        if order not in (0, 1, 2):
            raise ValueError("order must be 0, 1 or 2")
        t = np.asarray(t, dtype=float)
        out = np.full(t.shape, self.a0 if order == 0 else 0.0)
        for n, (an, bn) in enumerate(zip(self.a, self.b), start=1):
            w = 2.0 * math.pi * n * self.frequency
            wt = w * t
            if order == 0:
                out += an * np.cos(wt) + bn * np.sin(wt)
            elif order == 1:
                out += w * (-an * np.sin(wt) + bn * np.cos(wt))
            else:
                out += w * w * (-an * np.cos(wt) - bn * np.sin(wt))
        return out if out.shape else float(out)

    def scaled(self, factor):
        """Series with all harmonic amplitudes multiplied by ``factor``."""
        return replace(self, a=tuple(factor * x for x in self.a),
                       b=tuple(factor * x for x in self.b))


def fit_fourier(t, angle, frequency, n_harmonics=5):
    """Least-squares Fourier fit of sampled angles at a known frequency.

    Parameters
    ----------
    t, angle : array_like
        Sample times (s) and angles (rad).
    frequency : float
        Flapping frequency (Hz) fixing the fundamental period.
    n_harmonics : int
        Number of harmonics to fit.

    Returns
    -------
    series : FourierSeries
    rms_residual : float
        Root-mean-square fit residual (rad).

    Raises
    ------
    ValueError
        If there are fewer than ``2 n_harmonics + 1`` samples or the
        samples leave the design matrix rank deficient (for example all
        samples at coincident phases).
    """
    t = np.asarray(t, dtype=float).ravel()
    angle = np.asarray(angle, dtype=float).ravel()
    n_coef = 2 * n_harmonics + 1
    if t.size != angle.size:
        raise ValueError("time and angle arrays must have equal length")
    if t.size < n_coef:
        raise ValueError(
            f"need at least {n_coef} samples to fit {n_harmonics} harmonics, got {t.size}")

    phases = 2.0 * math.pi * frequency * np.outer(t, np.arange(1, n_harmonics + 1))
    design = np.hstack([np.ones((t.size, 1)), np.cos(phases), np.sin(phases)])
    coef, _, rank, _ = np.linalg.lstsq(design, angle, rcond=None)
    if rank < n_coef:
        raise ValueError(
            "rank-deficient fit: samples do not cover enough distinct phases "
            f"(rank {rank} < {n_coef})")

    series = FourierSeries(a0=float(coef[0]),
                           a=tuple(coef[1:n_harmonics + 1]),
                           b=tuple(coef[n_harmonics + 1:]),
                           frequency=float(frequency))
    rms = float(np.sqrt(np.mean((design @ coef - angle) ** 2)))
    return series, rms


def geometric_aoa(rotation_angle, stroke_rate):
    """Geometric angle of attack from the rotation angle and stroke rate.

    Equals the rotation angle while the wing moves in the upstroke
    direction (positive stroke rate) and its supplement on the downstroke;
    at stroke reversal the convention is 90 degrees. Result clipped to
    [0, pi].
    """
    rotation_angle = np.asarray(rotation_angle, dtype=float)
    stroke_rate = np.asarray(stroke_rate, dtype=float)
    aoa = np.where(stroke_rate > 0.0, rotation_angle,
                   np.where(stroke_rate < 0.0, math.pi - rotation_angle,
                            0.5 * math.pi))
    aoa = np.clip(aoa, 0.0, math.pi)
    return aoa if aoa.shape else float(aoa)


@dataclass(frozen=True)
class WingKinematics:
    """Stroke series plus rotation series at spanwise stations.

    ``rotation_stations`` maps span fraction (0 root .. 1 tip) to the
    rotation-angle series at that station. All series must share the
    flapping frequency.
    """

    stroke: FourierSeries
    rotation_stations: tuple

    def __post_init__(self):
        if not self.rotation_stations:
            raise ValueError("need at least one rotation station")
        stations = sorted(self.rotation_stations, key=lambda sf: sf[0])
        object.__setattr__(self, "rotation_stations", tuple(stations))
        for frac, series in stations:
            if not 0.0 <= frac <= 1.0:
                raise ValueError("station span fraction must lie in [0, 1]")
            if series.frequency != self.stroke.frequency:
                raise ValueError("all series must share the flapping frequency")

    @property
    def frequency(self):
        return self.stroke.frequency

    @cached_property
    def stroke_amplitude(self):
        """Peak-to-peak stroke range (rad) from dense sampling."""
        t = np.linspace(0.0, self.stroke.period, 1440, endpoint=False)
        angles = self.stroke.eval(t)
        return float(np.max(angles) - np.min(angles))

    def station_weights(self, span_fraction):
        """Linear-interpolation weights over stations; clamped outside."""
        fracs = np.array([f for f, _ in self.rotation_stations])
        span_fraction = np.atleast_1d(np.asarray(span_fraction, dtype=float))
        weights = np.zeros((span_fraction.size, fracs.size))
        for k, s in enumerate(span_fraction):
            if s <= fracs[0]:
                weights[k, 0] = 1.0
            elif s >= fracs[-1]:
                weights[k, -1] = 1.0
            else:
                i = int(np.searchsorted(fracs, s, side="right")) - 1
                w = (s - fracs[i]) / (fracs[i + 1] - fracs[i])
                weights[k, i] = 1.0 - w
                weights[k, i + 1] = w
        return weights

    def rotation_at(self, span_fraction, t, order=0):
        """Rotation angle (or derivative) at a span fraction and time."""
        values = np.stack([series.eval(t, order)
                           for _, series in self.rotation_stations], axis=-1)
        weights = self.station_weights(span_fraction)
        out = values @ weights.T if weights.shape[0] > 1 else values @ weights[0]
        return out if np.ndim(out) else float(out)

    def with_frequency(self, frequency):
        """Time-rescaled kinematics: same coefficients, new frequency."""
        stroke = replace(self.stroke, frequency=float(frequency))
        stations = tuple((f, replace(s, frequency=float(frequency)))
                         for f, s in self.rotation_stations)
        return WingKinematics(stroke=stroke, rotation_stations=stations)

    def with_stroke_amplitude(self, amplitude):
        """Stroke harmonics rescaled to a target peak-to-peak range (rad)."""
        current = self.stroke_amplitude
        if current <= 0.0:
            raise ValueError("cannot rescale a zero-amplitude stroke")
        return WingKinematics(stroke=self.stroke.scaled(amplitude / current),
                              rotation_stations=self.rotation_stations)
