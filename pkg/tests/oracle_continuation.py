"""Independent continuation oracle for the real-axis polarization formulas.

The imaginary-axis integral representation of the tensor components is
analytic in the frequency argument on the right half plane.  Evaluating it
at xi = eta - i*omega with small eta > 0 therefore approaches the retarded
real-axis value from the analytic side, with no branch decisions at all:
every square root is the principal one of a fully complex quantity.  This
gives a slow but assumption-free cross-check of the region-split real-axis
evaluators, including their square-root branch choices.

The real-part extraction of the imaginary-axis formulas is continued as the
half sum (Z(xi) + conj(Z(conj(xi))))/2, which reduces to Re Z for real xi.

Only used by the test suite.
"""

import numpy as np

from cpgraphene.quantities import BOLTZMANN_EV_PER_K, FINE_STRUCTURE


def _gauss_segments(f, a, b, n_seg=400, order=16):
    """Composite Gauss-Legendre along a straight contour in the complex plane."""
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(0.0, 1.0, n_seg + 1)
    total = 0.0 + 0.0j
    direction = b - a
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        t = mid + half * x
        pts = a + direction * t
        total += np.sum(w * f(pts)) * half * direction
    return total


def _component_integrals(sheet, xi_c, k, T_p, u_max_factor=60.0, n_seg=600):
    """The two u-integrals of the imaginary-axis representation at complex xi."""
    r = sheet.fermi_velocity_ratio
    rk = r * k
    qt = np.sqrt(complex(rk * rk) + xi_c * xi_c)
    if qt.real < 0:
        qt = -qt
    d = sheet.delta / qt
    gam = xi_c / qt
    kT = BOLTZMANN_EV_PER_K * T_p
    b = qt / (2.0 * kT)
    m = sheet.mu / kT

    def weight(u):
        # complex-safe pair of Fermi factors
        z1 = b * u + m
        z2 = b * u - m
        return 1.0 / (np.exp(z1) + 1.0) + 1.0 / (np.exp(z2) + 1.0)

    def z00(u):
        n = 1.0 - u * u + 2j * gam * u
        s = np.sqrt(n + d * d * (1.0 - gam * gam))
        return weight(u) * (1.0 - n / s)

    def zpp(u):
        mt = xi_c * xi_c - qt * qt * u * u + 2j * xi_c * qt * u + (qt * qt - xi_c * xi_c) * d * d
        s = np.sqrt(1.0 - u * u + 2j * gam * u + d * d * (1.0 - gam * gam))
        return weight(u) * (xi_c * xi_c - mt / s)

    # contour from the complex lower limit straight to large real u
    lo = d
    hi = d.real + u_max_factor * abs(1.0 / b) + 10.0 * abs(d) + 20.0
    i00 = _gauss_segments(z00, lo, hi, n_seg=n_seg)
    ipp = _gauss_segments(zpp, lo, hi, n_seg=n_seg)
    return qt, i00, ipp


def _half_sum_eval(sheet, xi_c, k, T_p, **kw):
    r = sheet.fermi_velocity_ratio
    alpha = FINE_STRUCTURE
    qt, i00, ipp = _component_integrals(sheet, xi_c, k, T_p, **kw)
    d = sheet.delta / qt
    # psi continued: 2[x + (1-x^2) arctan(1/x)] with principal arctan
    psi_c = 2.0 * (d + (1.0 - d * d) * np.arctan(1.0 / d)) if sheet.delta > 0 else np.pi
    p00 = alpha * k * k * psi_c / qt + 4.0 * alpha / (r * r) * qt * i00
    ppp = alpha * k * k * qt * psi_c - 4.0 * alpha / (r * r) * qt * ipp
    return p00, ppp


def retarded_pair(sheet, omega, k, T_p, eta, **kw):
    """Oracle value of (pi00, pi) at real frequency omega via xi = eta - i omega."""
    za = _half_sum_eval(sheet, complex(eta, -omega), k, T_p, **kw)
    zb = _half_sum_eval(sheet, complex(eta, omega), k, T_p, **kw)
    return (
        0.5 * (za[0] + np.conj(zb[0])),
        0.5 * (za[1] + np.conj(zb[1])),
    )
