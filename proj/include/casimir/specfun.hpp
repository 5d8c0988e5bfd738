#pragma once

// Modified Bessel functions of the second kind at the three orders the
// lattice sums use, and a geometric tail bound for truncated series.

#include <casimir/constants.hpp>
#include <casimir/error.hpp>

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace casimir {

enum class BesselOrder { Half, One, ThreeHalves };

inline double order_value(BesselOrder nu) {
  switch (nu) {
  case BesselOrder::Half: return 0.5;
  case BesselOrder::One: return 1.0;
  case BesselOrder::ThreeHalves: return 1.5;
  }
  return 0.0;
}

/// Maps a numeric order onto the supported set; throws DomainError otherwise.
inline BesselOrder bessel_order(double nu) {
  if (nu == 0.5) return BesselOrder::Half;
  if (nu == 1.0) return BesselOrder::One;
  if (nu == 1.5) return BesselOrder::ThreeHalves;
  throw DomainError("bessel_k: unsupported order " + std::to_string(nu));
}

namespace detail {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

/// Beyond this argument exp(-x) underflows to zero in double.
inline constexpr double bessel_underflow_x = 745.2;

/// Boundary between the power series and the continued fraction for K_1.
inline constexpr double k1_seam = 2.0;

/// K_1(x) from its ascending series; accurate for 0 < x <= ~2.
inline double k1_series(double x) {
  const double half_x = 0.5 * x;
  const double q = half_x * half_x;
  // I_1 and the digamma-weighted companion sum, sharing the ratio q^k / (k! (k+1)!).
  double coeff = 1.0;
  double psi_k1 = -euler_gamma;            // psi(k+1)
  double psi_k2 = 1.0 - euler_gamma;       // psi(k+2)
  double i1 = 0.0;
  double companion = 0.0;
  for (int k = 0; k < 60; ++k) {
    i1 += coeff;
    const double term = (psi_k1 + psi_k2) * coeff;
    companion += term;
    if (k > 0 && std::abs(term) < 1e-18 * std::abs(companion) && coeff < 1e-18 * i1) break;
    psi_k1 += 1.0 / (k + 1);
    psi_k2 += 1.0 / (k + 2);
    coeff *= q / ((k + 1.0) * (k + 2.0));
  }
  i1 *= half_x;
  return 1.0 / x + std::log(half_x) * i1 - 0.5 * half_x * companion;
}

/// (e^x K_0(x), e^x K_1(x)) by Steed's continued fraction (Temme's CF2 with
/// mu = 0); converges quickly for x >= ~1.5.
inline std::pair<double, double> k01_scaled_cf(double x) {
  constexpr double eps = 1e-17;
  const double a1 = 0.25;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < 10000; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps) break;
  }
  h *= a1;
  const double k0 = std::sqrt(constants::pi / (2.0 * x)) / s;
  const double k1 = k0 * (x + 0.5 - h) / x;
  return {k0, k1};
}

} // namespace detail

/// e^x K_nu(x). Decreasing in x for every supported order.
inline double bessel_k_scaled(BesselOrder nu, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_k: argument must be positive and finite");
  const double half_order = std::sqrt(constants::pi / (2.0 * x));
  switch (nu) {
  case BesselOrder::Half: return half_order;
  case BesselOrder::ThreeHalves: return half_order * (1.0 + 1.0 / x);
  case BesselOrder::One:
    if (x <= detail::k1_seam) return std::exp(x) * detail::k1_series(x);
    return detail::k01_scaled_cf(x).second;
  }
  return 0.0;
}

/// K_nu(x) for nu in {1/2, 1, 3/2}. Returns exactly 0 once the result
/// underflows double range.
inline double bessel_k(BesselOrder nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k: argument must be positive");
  if (x > detail::bessel_underflow_x) return 0.0;
  if (nu == BesselOrder::One && x <= detail::k1_seam) return detail::k1_series(x);
  return bessel_k_scaled(nu, x) * std::exp(-x);
}

inline double bessel_k(double nu, double x) { return bessel_k(bessel_order(nu), x); }

/// Upper bound on sum_{n >= start} prefactor * exp(-rate * n).
inline double exp_tail_bound(double prefactor, double rate, double start) {
  if (!(rate > 0.0)) throw DomainError("exp_tail_bound: rate must be positive");
  return prefactor * std::exp(-rate * start) / -std::expm1(-rate);
}

} // namespace casimir
