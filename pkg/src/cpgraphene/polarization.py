"""Polarization response of a gapped, doped graphene sheet.

Two reduced components are produced everywhere: ``pi00`` is the density
response scaled to eV and ``pi`` the combination entering the TE channel,
scaled to eV^3 (it carries two extra wave-vector powers).  Both are given
on the imaginary frequency axis and, for evanescent kinematics, on the real
frequency axis in the three analytic-continuation regions:

* plasmonic subgap   (omega/c < k <= omega/v_F, continuation energy below
  the gap): strictly real response;
* plasmonic supragap (same wavevector range, continuation energy at or
  above the gap): complex response, with inverse-square-root integrable
  edges where the continuation denominators vanish;
* large wavevector   (k > omega/v_F): complex response whose imaginary
  part switches on only where the thermal occupation reaches the
  continuation window.

Square-root branches on the real axis: negative radicands take the branch
sqrt(-|x|) = +i sqrt(|x|); the sign conventions per region are anchored by
continuity with the imaginary axis (the static limit) and by the
dissipative requirement Im pi00 >= 0, and are cross-checked in the test
suite against a direct numerical continuation of the imaginary-axis
integral representation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.special import expit

from .errors import DomainError, InvalidParameterError
from .quadrature import QuadratureSpec, integrate_finite, integrate_semiinfinite
from .quantities import BOLTZMANN_EV_PER_K, FERMI_VELOCITY_RATIO, FINE_STRUCTURE

# Plate temperatures below this route to the zero-temperature fast path (K).
ZERO_TEMPERATURE_THRESHOLD = 1e-3

# Branch of the lambda=-1 square root inside the large-k window where its
# radicand is negative: "+i", "-i", or "pv" (real principal value, i.e. the
# two imaginary branches averaged).  Fixed by the continuation cross-check.
LARGEK_WINDOW_BRANCH = "+i"

DEFAULT_INNER_SPEC = QuadratureSpec(rel_tol=1e-9, abs_tol=1e-300, max_evaluations=400_000)


class Region(Enum):
    IMAGINARY_AXIS = "imaginary_axis"
    PLASMONIC_SUBGAP = "plasmonic_subgap"
    PLASMONIC_SUPRAGAP = "plasmonic_supragap"
    LARGE_K = "large_k"


class TemperaturePath(Enum):
    FINITE_T = "finite_t"
    ZERO_T = "zero_t"


@dataclass(frozen=True)
class GrapheneSheet:
    """Mass gap and chemical potential in eV, plus the Dirac-cone slope."""

    delta: float = 0.0
    mu: float = 0.0
    fermi_velocity_ratio: float = FERMI_VELOCITY_RATIO

    def __post_init__(self):
        if self.delta < 0 or self.mu < 0:
            raise InvalidParameterError("delta and mu must be non-negative")
        if not math.isfinite(self.delta) or not math.isfinite(self.mu):
            raise InvalidParameterError("delta and mu must be finite")
        if not 0 < self.fermi_velocity_ratio < 1:
            raise InvalidParameterError("fermi_velocity_ratio must lie in (0, 1)")

    @property
    def gap_dominated(self) -> bool:
        return self.delta > 2.0 * self.mu


@dataclass(frozen=True)
class PolarizationPair:
    pi00: complex
    pi: complex
    region: Region
    temperature_path: TemperaturePath
    error_estimate: float = 0.0
    evaluations: int = 0


@dataclass(frozen=True)
class RegionClassification:
    region: Region
    p: float = None  # plasmonic continuation energy sqrt(W^2 - r^2 K^2), eV
    qtilde: float = None  # large-k energy sqrt(r^2 K^2 - W^2), eV
    a_factor: float = None  # 1 - delta^2/p^2
    d_lower: float = None  # lower integration limit (Delta/p or Delta/qtilde)
    u1: float = None
    u2: float = None
    u0: float = None  # 2 mu / p
    u0_tilde: float = None  # 2 mu / qtilde


def psi(x):
    """The gap function 2[x + (1 - x^2) arctan(1/x)]; psi(0) = pi."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise DomainError("psi requires x >= 0")
    with np.errstate(divide="ignore"):
        inv = np.where(arr > 0, 1.0 / np.where(arr > 0, arr, 1.0), np.inf)
    val = 2.0 * (arr + (1.0 - arr * arr) * np.arctan(inv))
    return float(val) if np.isscalar(x) or arr.ndim == 0 else val


def fermi_weight(u, B, mu_over_kT):
    """Sum of two Fermi factors, sum_{kappa=+-1} 1/(exp(B u + kappa m) + 1)."""
    if B <= 0:
        raise InvalidParameterError("B must be positive")
    z = B * np.asarray(u, dtype=float)
    val = expit(mu_over_kT - z) + expit(-mu_over_kT - z)
    return float(val) if np.isscalar(u) else val


def classify_region(sheet: GrapheneSheet, omega: float, k: float) -> RegionClassification:
    """Assign an evanescent (omega, k) point to its continuation region."""
    if k < omega:
        raise DomainError("evanescent sector requires k >= omega")
    r = sheet.fermi_velocity_ratio
    rk = r * k
    if rk >= omega:
        # includes the boundary k = omega/v_F
        if rk == omega:
            return RegionClassification(region=Region.LARGE_K, qtilde=0.0)
        qt = math.sqrt((rk - omega) * (rk + omega))
        return RegionClassification(
            region=Region.LARGE_K,
            qtilde=qt,
            d_lower=sheet.delta / qt,
            u0_tilde=2.0 * sheet.mu / qt,
        )
    p = math.sqrt((omega - rk) * (omega + rk))
    dt = sheet.delta / p
    if p < sheet.delta:
        return RegionClassification(
            region=Region.PLASMONIC_SUBGAP,
            p=p,
            a_factor=1.0 - dt * dt,
            d_lower=dt,
            u0=2.0 * sheet.mu / p,
        )
    a = 1.0 - dt * dt
    sq = rk * math.sqrt(a)
    return RegionClassification(
        region=Region.PLASMONIC_SUPRAGAP,
        p=p,
        a_factor=a,
        d_lower=dt,
        u1=(omega - sq) / p,
        u2=(omega + sq) / p,
        u0=2.0 * sheet.mu / p,
    )


# --- shared integration plumbing -------------------------------------------


def _run_intervals(kernel, intervals, tail, spec, abs_scale):
    """Integrate a 2-component kernel over finite intervals plus one tail.

    ``intervals``: list of (lo, hi, singular_left, singular_right, splits);
    ``tail``: None or (lo, decay_scale, singular_left, splits).
    Returns (value2, err, evals).
    """
    total = np.zeros(2, dtype=complex)
    err = 0.0
    evals = 0
    base = QuadratureSpec(
        rel_tol=spec.rel_tol,
        abs_tol=max(abs_scale, 1e-300),
        max_evaluations=spec.max_evaluations,
    )
    for lo, hi, sl, sr, splits in intervals:
        if hi - lo <= 1e-15 * max(abs(lo), abs(hi), 1.0):
            continue
        seg_spec = QuadratureSpec(
            rel_tol=base.rel_tol,
            abs_tol=base.abs_tol,
            max_evaluations=base.max_evaluations,
            split_points=tuple(s for s in splits if lo < s < hi),
            singular_left=sl,
            singular_right=sr,
        )
        res = integrate_finite(kernel, lo, hi, seg_spec)
        total = total + np.atleast_1d(res.value)
        err += res.error_estimate
        evals += res.evaluations
    if tail is not None:
        lo, decay, sl, splits = tail
        tail_spec = QuadratureSpec(
            rel_tol=base.rel_tol,
            abs_tol=base.abs_tol,
            max_evaluations=base.max_evaluations,
            split_points=tuple(s for s in splits if s > lo),
            singular_left=sl,
        )
        res = integrate_semiinfinite(kernel, lo, decay, tail_spec)
        total = total + np.atleast_1d(res.value)
        err += res.error_estimate
        evals += res.evaluations
    return total, err, evals


def _thermal_factory(B, m):
    def w(u):
        return expit(m - B * u) + expit(-m - B * u)

    return w


# --- imaginary axis ----------------------------------------------------------


def pi_matsubara(
    sheet: GrapheneSheet,
    xi: float,
    k: float,
    plate_temperature: float,
    spec: QuadratureSpec = DEFAULT_INNER_SPEC,
) -> PolarizationPair:
    """Both tensor components at imaginary frequency xi >= 0 (eV) and k > 0."""
    if xi < 0:
        raise InvalidParameterError("xi must be non-negative")
    if k <= 0:
        raise InvalidParameterError("k must be positive")
    if plate_temperature <= 0:
        raise InvalidParameterError("plate temperature must be positive")
    r = sheet.fermi_velocity_ratio
    alpha = FINE_STRUCTURE
    rk = r * k
    qt = math.hypot(rk, xi)
    d = sheet.delta / qt
    b = qt / (2.0 * BOLTZMANN_EV_PER_K * plate_temperature)
    m = sheet.mu / (BOLTZMANN_EV_PER_K * plate_temperature)
    w = _thermal_factory(b, m)

    first00 = alpha * k * k * psi(d) / qt
    firstpp = alpha * k * k * qt * psi(d)
    pref = 4.0 * alpha / (r * r) * qt

    dd = d * d
    xi2 = xi * xi
    qt2 = qt * qt
    c_rad = 1.0 + dd * (1.0 - (xi / qt) ** 2)
    c_m = (qt2 - xi2) * dd

    def kernel(u):
        u = np.asarray(u, dtype=float)
        n = 1.0 - u * u + 2j * (xi / qt) * u
        s = np.sqrt((c_rad - u * u + 2j * (xi / qt) * u).astype(complex))
        mtil = xi2 - qt2 * u * u + 2j * xi * qt * u + c_m
        wt = w(u)
        k00 = wt * (1.0 - (n / s).real)
        kpp = wt * (xi2 - (mtil / s).real)
        return np.vstack([k00, kpp])

    # interior near-singular point where the radicand's real part vanishes
    rad0 = 1.0 + dd * (1.0 - (xi / qt) ** 2)
    u_edge = math.sqrt(rad0) if rad0 > d * d else None
    splits = []
    if sheet.mu > 0:
        splits.append(2.0 * sheet.mu / qt)
    intervals = []
    tail_lo = d
    if u_edge is not None and u_edge > d:
        if xi == 0.0:
            intervals.append((d, u_edge, False, True, splits))
        else:
            intervals.append((d, u_edge, False, False, splits))
        tail_lo = u_edge
    abs_scale = spec.rel_tol * 0.1 * max(min(first00, firstpp / max(qt2, 1e-30)) / pref, 1e-30)
    val, err, evals = _run_intervals(
        kernel, intervals, (tail_lo, 1.0 / b, False, splits), spec, abs_scale
    )
    pi00 = first00 + pref * val[0].real
    pipp = firstpp - pref * val[1].real
    return PolarizationPair(
        pi00=pi00,
        pi=pipp,
        region=Region.IMAGINARY_AXIS,
        temperature_path=TemperaturePath.FINITE_T,
        error_estimate=pref * err,
        evaluations=evals,
    )


# --- real axis: plasmonic region ---------------------------------------------


def _phi1(delta, p):
    dt = delta / p
    return delta - p * (1.0 + dt * dt) * math.atanh(p / delta)


def _phi2(delta, p):
    dt = delta / p
    if p == delta:
        raise DomainError("continuation energy exactly at the gap threshold")
    return delta - p * (1.0 + dt * dt) * complex(math.atanh(delta / p), 0.5 * math.pi)


def _plasmonic_kernel_factory(sheet, omega, k, p, a, weight, signed_minus, window=False):
    """Kernel [k00, kpp_scaled] for the plasmonic region.

    ``signed_minus`` selects the lambda-signed sum (True) or unsigned sum
    (False) for the lambda=-1 term; ``window`` evaluates the lambda=-1
    square root on the +i branch (radicand negative there).
    """
    r = sheet.fermi_velocity_ratio
    rk = r * k
    rk2a = rk * rk * a
    rk2 = rk * rk
    dt2 = (sheet.delta / p) ** 2
    w2 = omega * omega

    def kernel(u):
        u = np.asarray(u, dtype=float)
        xp = p * u + omega
        xm = p * u - omega
        sp = np.sqrt(xp * xp - rk2a)
        b1p = (xp * xp - rk2) / sp
        b2p = (xp * xp + rk2 * dt2) / sp
        if window:
            sm = 1j * np.sqrt(np.abs(xm * xm - rk2a))
        else:
            sm = np.sqrt(xm * xm - rk2a)
        b1m = (xm * xm - rk2) / sm
        b2m = (xm * xm + rk2 * dt2) / sm
        sign = -1.0 if signed_minus else 1.0
        wt = weight(u)
        k00 = wt * (1.0 - (b1p + sign * b1m) / (2.0 * p))
        kpp = wt * (w2 - 0.5 * p * (b2p + sign * b2m))
        return np.vstack([k00, kpp])

    return kernel


def _eval_plasmonic(sheet, omega, k, cls, weight, decay, spec, zero_t_upper=None):
    """Shared assembly for sub- and supragap; returns (pi00, pi, err, evals)."""
    r = sheet.fermi_velocity_ratio
    alpha = FINE_STRUCTURE
    p = cls.p
    a = cls.a_factor
    dt = cls.d_lower
    k2 = k * k
    pref = 4.0 * alpha / (r * r) * p
    if cls.region is Region.PLASMONIC_SUBGAP:
        phi = _phi1(sheet.delta, p)
    else:
        phi = _phi2(sheet.delta, p)
    first00 = -2.0 * alpha * k2 / (p * p) * phi
    firstpp = 2.0 * alpha * k2 * phi

    splits = []
    if cls.u0 is not None and cls.u0 > dt and zero_t_upper is None:
        splits.append(cls.u0)
    x0 = omega / p  # lambda=-1 argument crosses zero here
    if x0 > dt:
        splits.append(x0)

    hi_end = math.inf if zero_t_upper is None else zero_t_upper
    pieces = []  # (kernel, lo, hi, singular_left, singular_right)
    tail = None  # (kernel, lo)
    if cls.region is Region.PLASMONIC_SUBGAP:
        kern = _plasmonic_kernel_factory(sheet, omega, k, p, a, weight, signed_minus=True)
        if zero_t_upper is None:
            tail = (kern, dt)
        elif hi_end > dt:
            pieces.append((kern, dt, hi_end, False, False))
    else:
        u1, u2 = cls.u1, cls.u2
        kern_lo = _plasmonic_kernel_factory(sheet, omega, k, p, a, weight, signed_minus=False)
        kern_win = _plasmonic_kernel_factory(
            sheet, omega, k, p, a, weight, signed_minus=True, window=True
        )
        kern_hi = _plasmonic_kernel_factory(sheet, omega, k, p, a, weight, signed_minus=True)
        if min(u1, hi_end) > dt:
            pieces.append((kern_lo, dt, min(u1, hi_end), False, True))
        if hi_end > u1 and min(u2, hi_end) > u1:
            pieces.append((kern_win, u1, min(u2, hi_end), True, True))
        if hi_end > u2:
            if zero_t_upper is None:
                tail = (kern_hi, u2)
            else:
                pieces.append((kern_hi, u2, hi_end, True, False))

    abs_scale = _plasmonic_abs_scale(spec, first00, firstpp, pref, omega)
    total = np.zeros(2, dtype=complex)
    err = 0.0
    evals = 0
    for kern_i, lo, hi, sl, sr in pieces:
        v, e, n = _run_intervals(kern_i, [(lo, hi, sl, sr, splits)], None, spec, abs_scale)
        total += v
        err += e
        evals += n
    if tail is not None:
        kern_i, lo = tail
        sl = cls.region is Region.PLASMONIC_SUPRAGAP
        v, e, n = _run_intervals(kern_i, [], (lo, decay, sl, splits), spec, abs_scale)
        total += v
        err += e
        evals += n
    pi00 = first00 + pref * total[0]
    pipp = firstpp + pref * total[1]
    return pi00, pipp, pref * err, evals


def _plasmonic_abs_scale(spec, first00, firstpp, pref, omega):
    s00 = abs(first00)
    spp = abs(firstpp) / max(omega * omega, 1e-30)
    return spec.rel_tol * 0.1 * max(min(s00, spp) / pref, 1e-30)


def pi_real_subgap(sheet, omega, k, plate_temperature, spec=DEFAULT_INNER_SPEC):
    """Strictly real pair in the plasmonic region below the gap threshold."""
    cls = classify_region(sheet, omega, k)
    if cls.region is not Region.PLASMONIC_SUBGAP:
        raise DomainError(f"point is in {cls.region.value}, not plasmonic_subgap")
    if plate_temperature <= 0:
        raise InvalidParameterError("plate temperature must be positive")
    kT = BOLTZMANN_EV_PER_K * plate_temperature
    b = cls.p / (2.0 * kT)
    weight = _thermal_factory(b, sheet.mu / kT)
    pi00, pipp, err, evals = _eval_plasmonic(sheet, omega, k, cls, weight, 1.0 / b, spec)
    return PolarizationPair(
        pi00=float(np.real(pi00)),
        pi=float(np.real(pipp)),
        region=cls.region,
        temperature_path=TemperaturePath.FINITE_T,
        error_estimate=err,
        evaluations=evals,
    )


def pi_real_supragap(sheet, omega, k, plate_temperature, spec=DEFAULT_INNER_SPEC):
    """Complex pair in the plasmonic region at or above the gap threshold."""
    cls = classify_region(sheet, omega, k)
    if cls.region is not Region.PLASMONIC_SUPRAGAP:
        raise DomainError(f"point is in {cls.region.value}, not plasmonic_supragap")
    if plate_temperature <= 0:
        raise InvalidParameterError("plate temperature must be positive")
    kT = BOLTZMANN_EV_PER_K * plate_temperature
    b = cls.p / (2.0 * kT)
    weight = _thermal_factory(b, sheet.mu / kT)
    pi00, pipp, err, evals = _eval_plasmonic(sheet, omega, k, cls, weight, 1.0 / b, spec)
    return PolarizationPair(
        pi00=complex(pi00),
        pi=complex(pipp),
        region=cls.region,
        temperature_path=TemperaturePath.FINITE_T,
        error_estimate=err,
        evaluations=evals,
    )


# --- real axis: large wavevectors --------------------------------------------


def _largek_kernel_factory(sheet, omega, k, qt, weight, branch_minus, branch_plus):
    """Kernel [k00, kpp_scaled] in the large-k region.

    ``branch_minus``/``branch_plus``: one of "real" (principal square root,
    positive), "neg" (negative real root), "+i", "-i", "pv".
    """
    r = sheet.fermi_velocity_ratio
    gt = omega / qt
    d = sheet.delta / qt
    dd2 = d * d * (1.0 + gt * gt)
    rkd2 = (r * k * sheet.delta / qt) ** 2
    w2 = omega * omega

    def _s(rho, mode):
        if mode == "real":
            return np.sqrt(rho).astype(complex)
        if mode == "neg":
            return -np.sqrt(rho).astype(complex)
        mag = np.sqrt(np.abs(rho))
        if mode == "+i":
            return 1j * mag
        if mode == "-i":
            return -1j * mag
        raise InvalidParameterError(f"unknown branch mode {mode}")

    def kernel(u):
        u = np.asarray(u, dtype=float)
        np_ = 1.0 - u * u + 2.0 * gt * u
        nm = 1.0 - u * u - 2.0 * gt * u
        rho_p = np_ + dd2
        rho_m = nm + dd2
        mp = (omega - qt * u) ** 2 - rkd2
        mm = (omega + qt * u) ** 2 - rkd2
        wt = weight(u)
        if branch_minus == "pv":
            t00m = np.zeros_like(u, dtype=complex)
            tppm = np.zeros_like(u, dtype=complex)
        else:
            sm = _s(rho_m, branch_minus)
            t00m = nm / sm
            tppm = mm / sm
        sp = _s(rho_p, branch_plus)
        k00 = wt * (1.0 - 0.5 * (np_ / sp - t00m))
        kpp = wt * (w2 - 0.5 * (mp / sp - tppm))
        return np.vstack([k00, kpp])

    return kernel


def pi_real_largek(sheet, omega, k, plate_temperature, spec=DEFAULT_INNER_SPEC):
    """Complex pair in the region k > omega/v_F."""
    cls = classify_region(sheet, omega, k)
    if cls.region is not Region.LARGE_K:
        raise DomainError(f"point is in {cls.region.value}, not large_k")
    if plate_temperature <= 0:
        raise InvalidParameterError("plate temperature must be positive")
    kT = BOLTZMANN_EV_PER_K * plate_temperature
    b = cls.qtilde / (2.0 * kT)
    weight = _thermal_factory(b, sheet.mu / kT)
    pi00, pipp, err, evals = _eval_largek(sheet, omega, k, cls, weight, 1.0 / b, spec)
    return PolarizationPair(
        pi00=complex(pi00),
        pi=complex(pipp),
        region=cls.region,
        temperature_path=TemperaturePath.FINITE_T,
        error_estimate=err,
        evaluations=evals,
    )


def _eval_largek(sheet, omega, k, cls, weight, decay, spec, zero_t_upper=None):
    r = sheet.fermi_velocity_ratio
    alpha = FINE_STRUCTURE
    qt = cls.qtilde
    if qt == 0.0:
        raise DomainError("large-k formulas degenerate at k = omega/v_F")
    gt = omega / qt
    d = cls.d_lower
    k2 = k * k
    first00 = alpha * k2 * psi(d) / qt
    firstpp = alpha * k2 * qt * psi(d)
    pref = 4.0 * alpha / (r * r) * qt

    root = math.sqrt((1.0 + gt * gt) * (1.0 + d * d))
    rm = -gt + root
    rp = gt + root

    splits = []
    if cls.u0_tilde is not None and cls.u0_tilde > d and zero_t_upper is None:
        splits.append(cls.u0_tilde)

    kern_lo = _largek_kernel_factory(sheet, omega, k, qt, weight, "neg", "real")
    kern_win = _largek_kernel_factory(sheet, omega, k, qt, weight, LARGEK_WINDOW_BRANCH, "real")
    kern_hi = _largek_kernel_factory(sheet, omega, k, qt, weight, "+i", "+i")

    hi_end = math.inf if zero_t_upper is None else zero_t_upper
    pieces = []  # (kernel, lo, hi_or_None for tail)
    if min(rm, hi_end) > d:
        pieces.append((kern_lo, d, min(rm, hi_end), False, True))
    if hi_end > rm and min(rp, hi_end) > rm:
        pieces.append((kern_win, rm, min(rp, hi_end), True, True))
    tail = None
    if hi_end > rp:
        if zero_t_upper is None:
            tail = (rp, decay, True, splits)
        else:
            pieces.append((kern_hi, rp, hi_end, True, False))

    s00 = abs(first00)
    spp = abs(firstpp) / max(omega * omega, qt * qt * 1e-6, 1e-30)
    abs_scale = spec.rel_tol * 0.1 * max(min(s00, spp) / pref, 1e-30)

    total = np.zeros(2, dtype=complex)
    err = 0.0
    evals = 0
    for kern_i, lo, hi, sl, sr in pieces:
        v, e, n = _run_intervals(kern_i, [(lo, hi, sl, sr, splits)], None, spec, abs_scale)
        total += v
        err += e
        evals += n
    if tail is not None:
        v, e, n = _run_intervals(kern_hi, [], tail, spec, abs_scale)
        total += v
        err += e
        evals += n
    pi00 = first00 + pref * total[0]
    pipp = firstpp + pref * total[1]
    return pi00, pipp, pref * err, evals


# --- zero temperature ---------------------------------------------------------


def pi_zero_temperature(sheet, omega, k, spec=DEFAULT_INNER_SPEC):
    """The pair in the zero plate-temperature limit."""
    cls = classify_region(sheet, omega, k)
    alpha = FINE_STRUCTURE
    k2 = k * k
    if sheet.delta >= 2.0 * sheet.mu:
        # thermal weights vanish; only the closed first terms survive
        if cls.region is Region.PLASMONIC_SUBGAP:
            phi = _phi1(sheet.delta, cls.p)
            pi00 = -2.0 * alpha * k2 / (cls.p**2) * phi
            pipp = 2.0 * alpha * k2 * phi
        elif cls.region is Region.PLASMONIC_SUPRAGAP:
            phi = _phi2(sheet.delta, cls.p)
            pi00 = -2.0 * alpha * k2 / (cls.p**2) * phi
            pipp = 2.0 * alpha * k2 * phi
        else:
            if cls.qtilde == 0.0:
                raise DomainError("large-k formulas degenerate at k = omega/v_F")
            pi00 = alpha * k2 * psi(cls.d_lower) / cls.qtilde
            pipp = alpha * k2 * cls.qtilde * psi(cls.d_lower)
        return PolarizationPair(
            pi00=pi00, pi=pipp, region=cls.region, temperature_path=TemperaturePath.ZERO_T
        )

    # delta < 2 mu: the occupation becomes an indicator on [lower, u0]
    unit = lambda u: np.ones_like(u)
    if cls.region is Region.LARGE_K:
        pi00, pipp, err, evals = _eval_largek(
            sheet, omega, k, cls, unit, None, spec, zero_t_upper=cls.u0_tilde
        )
    else:
        pi00, pipp, err, evals = _eval_plasmonic(
            sheet, omega, k, cls, unit, None, spec, zero_t_upper=cls.u0
        )
    if cls.region is Region.PLASMONIC_SUBGAP:
        pi00 = float(np.real(pi00))
        pipp = float(np.real(pipp))
    return PolarizationPair(
        pi00=pi00,
        pi=pipp,
        region=cls.region,
        temperature_path=TemperaturePath.ZERO_T,
        error_estimate=err,
        evaluations=evals,
    )


def pi_real(sheet, omega, k, plate_temperature, spec=DEFAULT_INNER_SPEC):
    """Region-dispatched real-axis pair with the zero-temperature fast path."""
    if plate_temperature < ZERO_TEMPERATURE_THRESHOLD:
        return pi_zero_temperature(sheet, omega, k, spec)
    cls = classify_region(sheet, omega, k)
    if cls.region is Region.PLASMONIC_SUBGAP:
        return pi_real_subgap(sheet, omega, k, plate_temperature, spec)
    if cls.region is Region.PLASMONIC_SUPRAGAP:
        return pi_real_supragap(sheet, omega, k, plate_temperature, spec)
    return pi_real_largek(sheet, omega, k, plate_temperature, spec)
