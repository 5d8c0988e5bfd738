#!/usr/bin/env python3
"""Pin reference values for the casimirbox test suite.

Every value is computed by brute-force summation or quadrature in mpmath at
40 working digits, independently of the C++ library. Output goes to
data/fixtures.txt, one record per line:

    name key=value ... value=<17 sig. digits> tol=<relative tolerance>

Bessel terms whose argument exceeds CUT=120 are skipped (tail below 1e-45
relative). Mode sums skip x = beta*omega > MODE_CUT=70; the discarded tail is
below (pi/2) 70^2 e^{-70} / (beta_a beta_b beta_c) < 1e-25 for every point here.
"""

import argparse
import sys

import mpmath as mp

mp.mp.dps = 40
CUT = 120
MODE_CUT = 70

# CODATA 2018 (exact in SI since 2019), same values as include/casimir/constants.hpp
HBAR = mp.mpf("1.054571817e-34")
C_LIGHT = mp.mpf(299792458)
K_B = mp.mpf("1.380649e-23")
HBAR_C = HBAR * C_LIGHT


def bessel_k_quad(nu, x):
    f = lambda u: mp.exp(-x * mp.cosh(u)) * mp.cosh(nu * u)
    # Beyond u_max the integrand is below exp(-250) of its peak.
    u_max = mp.acosh(250 / x + 1) + 2
    return mp.quad(f, mp.linspace(0, u_max, 9))


def lattice_g(z, cutoff=200):
    s = mp.mpf(0)
    for n in range(1, cutoff + 1):
        for l in range(1, cutoff + 1):
            x = 2 * mp.pi * n * l * z
            if x > CUT:
                break
            s += mp.mpf(n) / l * mp.besselk(1, x)
    return -s / (2 * mp.pi)


def lattice_r(z1, z2, cutoff=100, jmax=100):
    z1, z2 = mp.mpf(z1), mp.mpf(z2)
    s = mp.mpf(0)
    for l in range(-cutoff, cutoff + 1):
        for p in range(-cutoff, cutoff + 1):
            if l == 0 and p == 0:
                continue
            r = mp.sqrt(l * l * z1 * z1 + p * p * z2 * z2)
            if 2 * mp.pi * r > CUT:
                continue
            for j in range(1, jmax + 1):
                x = 2 * mp.pi * j * r
                if x > CUT:
                    break
                s += (j / r) ** mp.mpf(1.5) * mp.besselk(mp.mpf(1.5), x)
    return z1 * z2 / 8 * s


def e0_scalar(a, b, c):
    a, b, c = mp.mpf(a), mp.mpf(b), mp.mpf(c)
    z3 = mp.zeta(3)
    return (-mp.pi**2 * b * c / (1440 * a**3) + z3 * (b + c) / (32 * mp.pi * a**2)
            - mp.pi / (96 * a) - mp.pi / (2 * a) * (lattice_g(b / a) + lattice_g(c / a))
            - lattice_r(b / a, c / a) / a)


def e0_em(a, b, c):
    a, b, c = mp.mpf(a), mp.mpf(b), mp.mpf(c)
    z3 = mp.zeta(3)
    return (-mp.pi**2 * b * c / (720 * a**3) - z3 * c / (16 * mp.pi * b**2)
            + mp.pi / 48 * (1 / a + 1 / b) + mp.pi / b * lattice_g(c / b)
            - 2 / a * lattice_r(b / a, c / a))


def orthant_sum(betas, term, cutoff):
    """Sum term(idx, x) over idx in [1, cutoff]^d, x = sqrt(sum beta_i^2 n_i^2)."""
    d = len(betas)
    s = mp.mpf(0)

    def rec(prefix, acc2):
        nonlocal s
        k = len(prefix)
        if k == d:
            x = mp.sqrt(acc2)
            if x <= MODE_CUT:
                s += term(prefix, x)
            return
        for n in range(1, cutoff + 1):
            a2 = acc2 + (betas[k] * n) ** 2
            if mp.sqrt(a2) > MODE_CUT:
                break
            rec(prefix + [n], a2)

    rec([], mp.mpf(0))
    return s


def log_term(idx, x):
    return mp.log(1 - mp.exp(-x))


def x_sum(ba, bb, bc, cutoff=200):
    return orthant_sum([ba, bb, bc], log_term, cutoff)


def y_sum(ba, bb, bc, cutoff=200, x=None):
    if x is None:
        x = x_sum(ba, bb, bc, cutoff)
    return (2 * x + orthant_sum([bb, bc], log_term, cutoff)
            + orthant_sum([ba, bb], log_term, cutoff) + orthant_sum([ba, bc], log_term, cutoff))


def kT_natural(T_kelvin):
    """k_B T / (hbar c) in 1/m."""
    return K_B * T_kelvin / HBAR_C


def cube_free_energy_dimless(field, t, e0_dimless):
    """a * F^phys for a cube of side a at reduced temperature t = T_eff / T."""
    z3 = mp.zeta(3)
    beta = 2 * mp.pi * t
    if field == "scalar":
        return (e0_dimless + x_sum(beta, beta, beta) / (2 * t) + mp.pi**2 / (1440 * t**4)
                - 3 * z3 / (32 * mp.pi * t**3) + mp.pi / (32 * t**2))
    return (e0_dimless + y_sum(beta, beta, beta) / (2 * t) + mp.pi**2 / (720 * t**4)
            - mp.pi / (16 * t**2))


def fmt(v):
    return mp.nstr(v, 17, min_fixed=1, max_fixed=0)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-o", "--output", default="data/fixtures.txt")
    args = ap.parse_args()

    rows = []

    def add(name, params, value, tol):
        kv = " ".join(f"{k}={v}" for k, v in params)
        rows.append(f"{name} {kv} value={fmt(value)} tol={tol}")
        print(rows[-1], file=sys.stderr)

    for nu_s, nu in (("1", 1), ("0.5", mp.mpf("0.5")), ("1.5", mp.mpf("1.5"))):
        for x in ("0.01", "1", "5", "30"):
            add("bessel_k", [("order", nu_s), ("x", x), ("oracle", "quadrature")],
                bessel_k_quad(nu, mp.mpf(x)), "1e-12")

    for z in ("1", "0.5", "2"):
        add("lattice_g", [("z", z), ("cutoff", 200)], lattice_g(mp.mpf(z)), "1e-9")
    for z1, z2 in (("1", "1"), ("0.5", "2"), ("2", "0.5"), ("0.3", "0.7")):
        add("lattice_r", [("z1", z1), ("z2", z2), ("cutoff", 100), ("jmax", 100)],
            lattice_r(mp.mpf(z1), mp.mpf(z2)), "1e-9")

    e0s_cube = e0_scalar(1, 1, 1)
    e0e_cube = e0_em(1, 1, 1)
    add("e0_scalar", [("a", 1), ("b", 1), ("c", 1)], e0s_cube, "1e-9")
    add("e0_scalar", [("a", 1), ("b", 5), ("c", 5)], e0_scalar(1, 5, 5), "1e-9")
    add("e0_scalar", [("a", 1), ("b", 2), ("c", 3)], e0_scalar(1, 2, 3), "1e-9")
    add("e0_scalar", [("a", 5), ("b", 1), ("c", 1)], e0_scalar(5, 1, 1), "1e-9")
    add("e0_em", [("a", 1), ("b", 1), ("c", 1)], e0e_cube, "1e-9")
    add("e0_em", [("a", 1), ("b", 2), ("c", 3)], e0_em(1, 2, 3), "1e-9")
    add("e0_em", [("a", "2.942"), ("b", 10), ("c", 10)], e0_em(mp.mpf("2.942"), 10, 10), "1e-9")
    add("e0_em", [("a", "34.29"), ("b", 10), ("c", 10)], e0_em(mp.mpf("34.29"), 10, 10), "1e-6")

    two_pi = 2 * mp.pi
    add("x_scalar", [("beta_a", "6.283185307179586"), ("beta_b", "6.283185307179586"),
                     ("beta_c", "6.283185307179586"), ("cutoff", 50)],
        x_cube := x_sum(two_pi, two_pi, two_pi, 50), "1e-9")
    add("y_em", [("beta_a", "6.283185307179586"), ("beta_b", "6.283185307179586"),
                 ("beta_c", "6.283185307179586"), ("cutoff", 50)],
        y_sum(two_pi, two_pi, two_pi, 50, x_cube), "1e-9")
    # A non-cube, high-temperature point where many shells contribute.
    ba, bb, bc = mp.pi / 2, mp.pi / 3, mp.pi / 5
    add("x_scalar", [("beta_a", "1.5707963267948966"), ("beta_b", "1.0471975511965976"),
                     ("beta_c", "0.62831853071795865"), ("cutoff", 200)],
        x_box := x_sum(ba, bb, bc), "1e-9")
    add("y_em", [("beta_a", "1.5707963267948966"), ("beta_b", "1.0471975511965976"),
                 ("beta_c", "0.62831853071795865"), ("cutoff", 200)],
        y_sum(ba, bb, bc, 200, x_box), "1e-9")

    # Cube a = 2 um at T = 300 K.
    a_m = mp.mpf("2e-6")
    t = 1 / (2 * a_m * kT_natural(300))
    beta = 2 * mp.pi * t
    add("reduced_t", [("a_um", 2), ("T_K", 300)], t, "1e-12")
    add("thermal_raw", [("field", "scalar"), ("a_um", 2), ("T_K", 300)],
        x_sum(beta, beta, beta) / (2 * t), "1e-9")
    add("thermal_raw", [("field", "em"), ("a_um", 2), ("T_K", 300)],
        y_sum(beta, beta, beta) / (2 * t), "1e-9")

    # Internal energy U = F - T dF/dT, by numerical differentiation of the
    # reduced free energy in k_B T (with a = 1, k_B T = 1/(2t)).
    for field, e0 in (("scalar", e0s_cube), ("em", e0e_cube)):
        f_of_kT = lambda kT, field=field, e0=e0: cube_free_energy_dimless(field, 1 / (2 * kT), e0)
        kT0 = 1 / (2 * t)
        u = f_of_kT(kT0) - kT0 * mp.diff(f_of_kT, kT0)
        add("internal_energy", [("field", field), ("a_um", 2), ("T_K", 300)], u, "1e-8")

    with open(args.output, "w") as fh:
        fh.write("# casimirbox reference values; generated by tools/make_fixtures.py (mpmath, 40 digits)\n")
        fh.write("# dimensionless quantities: energies as a*E, lattice sums as defined\n")
        for r in rows:
            fh.write(r + "\n")


if __name__ == "__main__":
    main()
