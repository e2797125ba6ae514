"""Dielectric response of the plate and nanoparticle polarizability.

Substrates respond either through tabulated optical data (imaginary part of
the permittivity versus photon energy) or through a Lorentz-oscillator
model.  Tabulated data are turned into the imaginary-axis permittivity with
the Kramers-Kronig transform; the linear interpolant of the table makes
every segment integrable in closed form, so no quadrature is involved.
"""

from __future__ import annotations

import io
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidMaterialError, InvalidParameterError, ParseError

_XI_STATIC = 1e-6  # imaginary-axis frequency used as the static proxy for tables


@dataclass(frozen=True)
class OpticalTable:
    """Tabulated Im eps over strictly increasing photon energies (eV)."""

    energies: tuple
    im_eps: tuple

    def __post_init__(self):
        e = np.asarray(self.energies, dtype=float)
        g = np.asarray(self.im_eps, dtype=float)
        if e.size == 0:
            raise InvalidMaterialError("optical table is empty")
        if e.size != g.size:
            raise InvalidMaterialError("energy and Im eps columns differ in length")
        if np.any(e <= 0):
            raise InvalidMaterialError("photon energies must be positive")
        if np.any(np.diff(e) <= 0):
            raise InvalidMaterialError("photon energies must be strictly increasing")
        if np.any(g < 0):
            raise InvalidMaterialError("Im eps must be non-negative (passivity)")
        if e[0] > 1e-3 or e[-1] < 1e2:
            warnings.warn(
                "optical table spans less than [1e-3, 1e2] eV; "
                "the zero-extension outside the table truncates the "
                "Kramers-Kronig integral",
                stacklevel=2,
            )


@dataclass(frozen=True)
class Oscillator:
    strength: float  # eV^2
    resonance: float  # eV
    damping: float = 0.0  # eV

    def __post_init__(self):
        if self.resonance <= 0:
            raise InvalidMaterialError("oscillator resonance must be positive")
        if self.strength < 0 or self.damping < 0:
            raise InvalidMaterialError("oscillator strength and damping must be non-negative")


@dataclass(frozen=True)
class OscillatorModel:
    """eps(i xi) = eps_inf + sum g_j / (w_j^2 + xi^2 + gamma_j xi)."""

    eps_inf: float = 1.0
    oscillators: tuple = ()

    def __post_init__(self):
        if self.eps_inf < 1.0:
            raise InvalidMaterialError("eps_inf must be at least 1")


class Vacuum:
    """Empty half space: eps identically 1."""

    def __repr__(self):
        return "Vacuum()"

    def __eq__(self, other):
        return isinstance(other, Vacuum)

    def __hash__(self):
        return hash("Vacuum")


@dataclass(frozen=True)
class Substrate:
    """A plate material evaluable on both frequency axes."""

    response: object  # OpticalTable | OscillatorModel | Vacuum
    static_epsilon: float = field(default=None)
    _re_grid: tuple = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        resp = self.response
        if not isinstance(resp, (OpticalTable, OscillatorModel, Vacuum)):
            raise InvalidMaterialError(f"unsupported response type {type(resp).__name__}")
        if self.static_epsilon is None:
            if isinstance(resp, Vacuum):
                eps0 = 1.0
            elif isinstance(resp, OscillatorModel):
                eps0 = resp.eps_inf + sum(o.strength / o.resonance**2 for o in resp.oscillators)
            else:
                eps0 = _kk_imaginary_axis(resp, _XI_STATIC)
            object.__setattr__(self, "static_epsilon", float(eps0))
        if self.static_epsilon < 1.0:
            raise InvalidMaterialError("static permittivity must be at least 1")
        if isinstance(resp, OpticalTable) and self._re_grid is None:
            object.__setattr__(self, "_re_grid", _build_real_axis_grid(resp))


def vacuum_substrate() -> Substrate:
    return Substrate(response=Vacuum())


def sio2_substrate() -> Substrate:
    """Bundled fused-silica stand-in: two infrared and one ultraviolet oscillator.

    The parameters are configuration data tuned to eps(0) = 3.81 and a
    visible-range index near 1.45; they are not a fit to any measured table.
    """
    return Substrate(
        response=OscillatorModel(
            eps_inf=1.0,
            oscillators=(
                Oscillator(strength=1.50 * 0.0567**2, resonance=0.0567, damping=0.005),
                Oscillator(strength=0.20 * 0.1330**2, resonance=0.1330, damping=0.008),
                Oscillator(strength=1.11 * 13.00**2, resonance=13.00, damping=0.50),
            ),
        )
    )


@dataclass(frozen=True)
class Nanoparticle:
    """Spherical nanoparticle: radius in nm, dielectric or metallic."""

    radius: float
    kind: str = "dielectric"
    eps0: float = None

    def __post_init__(self):
        if self.radius <= 0:
            raise InvalidParameterError("nanoparticle radius must be positive")
        if self.kind not in ("dielectric", "metallic"):
            raise InvalidParameterError(f"unknown nanoparticle kind {self.kind!r}")
        if self.kind == "dielectric":
            if self.eps0 is None:
                raise InvalidParameterError("dielectric nanoparticle needs eps0")
            if self.eps0 < 1.0:
                raise InvalidParameterError("nanoparticle eps0 must be at least 1")


def static_polarizability(particle: Nanoparticle) -> float:
    """Static polarizability in nm^3: R^3 (eps0-1)/(eps0+2), or R^3 for metals."""
    r3 = particle.radius**3
    if particle.kind == "metallic":
        return r3
    return r3 * (particle.eps0 - 1.0) / (particle.eps0 + 2.0)


# --- Kramers-Kronig machinery for tables ------------------------------------


def _segment_arrays(table: OpticalTable):
    e = np.asarray(table.energies, dtype=float)
    g = np.asarray(table.im_eps, dtype=float)
    x1, x2 = e[:-1], e[1:]
    m = (g[1:] - g[:-1]) / (x2 - x1)
    b = g[:-1] - m * x1
    return x1, x2, m, b


def _kk_imaginary_axis(table: OpticalTable, xi: float) -> float:
    """eps(i xi) = 1 + (2/pi) int x Im eps(x) / (x^2 + xi^2) dx, closed form per segment."""
    x1, x2, m, b = _segment_arrays(table)
    if xi > 1e-12:
        # int x (m x + b) / (x^2 + xi^2) dx
        #   = m [x - xi atan(x/xi)] + (b/2) log(x^2 + xi^2)
        t = m * ((x2 - x1) - xi * (np.arctan(x2 / xi) - np.arctan(x1 / xi)))
        t += 0.5 * b * np.log((x2**2 + xi**2) / (x1**2 + xi**2))
    else:
        t = m * (x2 - x1) + b * np.log(x2 / x1)
    return 1.0 + (2.0 / math.pi) * math.fsum(t)


def _kk_real_axis_point(table: OpticalTable, w: float) -> float:
    """Re eps(w) via the principal-value dispersion integral, segment-exact.

    With Im eps linear per segment, int x (m x + b)/(x^2 - w^2) dx has the
    antiderivative m [x + (w/2) log|x-w|/(x+w)] + (b/2) log|x^2 - w^2|.
    The log|x - w| coefficient equals Im eps(w)/2 on both sides of w (the
    interpolant is continuous), so summing the antiderivative over segment
    ends realizes the principal value, provided w is not exactly a node.
    """
    x1, x2, m, b = _segment_arrays(table)
    with np.errstate(divide="ignore"):
        f2 = m * (x2 + 0.5 * w * np.log(np.abs(x2 - w) / (x2 + w))) + 0.5 * b * np.log(
            np.abs(x2**2 - w**2)
        )
        f1 = m * (x1 + 0.5 * w * np.log(np.abs(x1 - w) / (x1 + w))) + 0.5 * b * np.log(
            np.abs(x1**2 - w**2)
        )
    pv = math.fsum(f2 - f1)
    return 1.0 + (2.0 / math.pi) * pv


def _build_real_axis_grid(table: OpticalTable, points_per_decade: int = 40):
    e = np.asarray(table.energies, dtype=float)
    lo = e[0] / 10.0
    hi = e[-1] * 10.0
    n = max(16, int(points_per_decade * math.log10(hi / lo)))
    grid = np.geomspace(lo, hi, n)
    # nudge grid points off table nodes where the antiderivative has a log
    nodes = set(float(x) for x in e)
    grid = np.array([g * (1.0 + 3e-9) if float(g) in nodes else g for g in grid])
    vals = np.array([_kk_real_axis_point(table, float(w)) for w in grid])
    return (tuple(grid), tuple(vals))


def permittivity_imaginary_axis(substrate: Substrate, xi: float) -> float:
    """Real eps(i xi) >= 1, non-increasing in xi."""
    if xi < 0:
        raise InvalidParameterError("xi must be non-negative")
    resp = substrate.response
    if isinstance(resp, Vacuum):
        return 1.0
    if isinstance(resp, OscillatorModel):
        return resp.eps_inf + sum(
            o.strength / (o.resonance**2 + xi * xi + o.damping * xi) for o in resp.oscillators
        )
    return _kk_imaginary_axis(resp, xi)


def permittivity_real_axis(substrate: Substrate, omega: float) -> complex:
    """Complex eps(omega) with Im eps >= 0."""
    if omega < 0:
        raise InvalidParameterError("omega must be non-negative")
    resp = substrate.response
    if isinstance(resp, Vacuum):
        return 1.0 + 0.0j
    if omega == 0.0:
        return complex(substrate.static_epsilon, 0.0)
    if isinstance(resp, OscillatorModel):
        eps = complex(resp.eps_inf, 0.0)
        for o in resp.oscillators:
            eps += o.strength / complex(o.resonance**2 - omega * omega, -o.damping * omega)
        return eps
    table = resp
    e = np.asarray(table.energies, dtype=float)
    g = np.asarray(table.im_eps, dtype=float)
    im = float(np.interp(omega, e, g, left=0.0, right=0.0))
    grid, vals = substrate._re_grid
    if omega <= grid[0]:
        re = substrate.static_epsilon
    elif omega >= grid[-1]:
        re = vals[-1]
    else:
        re = float(np.interp(math.log(omega), np.log(np.asarray(grid)), np.asarray(vals)))
    return complex(re, im)


def load_optical_table(source) -> OpticalTable:
    """Parse a two-column optical table.

    Accepts a byte/str stream or a string: photon energy (eV) and Im eps per
    line, comma or whitespace separated, '#' starts a comment.
    """
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    elif hasattr(source, "read"):
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    else:
        raise ParseError(f"unsupported source type {type(source).__name__}")

    energies, ims = [], []
    for lineno, line in enumerate(io.StringIO(text), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.replace(",", " ").split()
        if len(parts) != 2:
            raise ParseError(f"expected two columns, got {len(parts)}", line=lineno)
        try:
            e, g = float(parts[0]), float(parts[1])
        except ValueError:
            raise ParseError(f"non-numeric entry {body!r}", line=lineno) from None
        if e <= 0:
            raise ParseError(f"photon energy must be positive, got {e}", line=lineno)
        if g < 0:
            raise ParseError(f"Im eps must be non-negative, got {g}", line=lineno)
        if energies and e <= energies[-1]:
            raise ParseError(
                f"photon energies must be strictly increasing ({e} after {energies[-1]})",
                line=lineno,
            )
        energies.append(e)
        ims.append(g)
    if not energies:
        raise ParseError("no data rows found")
    return OpticalTable(tuple(energies), tuple(ims))
