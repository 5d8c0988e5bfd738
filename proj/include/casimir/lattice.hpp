#pragma once

// Bessel-kernel lattice sums entering the zero-temperature box energies:
//
//   G(z)      = -(1/2pi) sum_{n,l>=1} (n/l) K_1(2 pi n l z)
//   R(z1, z2) = (z1 z2 / 8) sum_{(l,p) != 0} sum_{j>=1}
//                 (j/r)^{3/2} K_{3/2}(2 pi j r),   r = sqrt(l^2 z1^2 + p^2 z2^2)
//
// Both are truncated with rigorous upper bounds on the discarded tail.

#include <casimir/constants.hpp>
#include <casimir/error.hpp>
#include <casimir/geometry.hpp>
#include <casimir/specfun.hpp>
#include <casimir/summation.hpp>

#include <cmath>
#include <cstdint>
#include <limits>

namespace casimir {

namespace detail {

/// Exact sum_{n >= start} n exp(-rate n).
inline double linear_exp_tail(double rate, double start) {
  const double q = std::exp(-rate);
  const double one_minus_q = -std::expm1(-rate);
  return std::exp(-rate * start) * (start - (start - 1.0) * q) / (one_minus_q * one_minus_q);
}

inline void check_lattice_argument(const char* series, double z, double tol, const ToleranceConfig& cfg) {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError(std::string(series) + ": argument must be positive");
  if (z < cfg.lattice_floor) throw ConvergenceError(series, std::numeric_limits<double>::infinity(), tol);
}

} // namespace detail

/// G(z) to relative tolerance `tol`.
inline double lattice_g(double z, double tol, const ToleranceConfig& cfg = {}) {
  detail::check_lattice_argument("lattice_g", z, tol, cfg);
  const double two_pi_z = 2.0 * constants::pi * z;

  CompensatedSum<double> total;
  std::int64_t visited = 0;
  for (int n = 1;; ++n) {
    const double rate = two_pi_z * n;
    CompensatedSum<double> row;
    for (int l = 1;; ++l) {
      row += static_cast<double>(n) / l * bessel_k(BesselOrder::One, rate * l);
      if (++visited > cfg.max_points) throw ConvergenceError("lattice_g", 1.0, tol);
      // e^x K_1(x) is decreasing, so K_1(rate m) <= e^{rate L} K_1(rate L) e^{-rate m}.
      const double next = l + 1.0;
      const double arg = rate * next;
      if (arg > detail::bessel_underflow_x) break;
      const double tail =
          n / next * bessel_k_scaled(BesselOrder::One, arg) * exp_tail_bound(1.0, rate, next);
      if (tail <= 0.5 * tol * std::abs(row.value())) break;
    }
    total += row.value();

    const double m = n + 1.0;
    const double arg = two_pi_z * m;
    if (arg > detail::bessel_underflow_x) break;
    const double rows_tail = bessel_k_scaled(BesselOrder::One, arg) / -std::expm1(-arg) *
                             detail::linear_exp_tail(two_pi_z, m);
    if (rows_tail <= 0.5 * tol * std::abs(total.value())) break;
  }
  return -total.value() / (2.0 * constants::pi);
}

namespace detail {

/// sum_{j>=1} (j/r)^{3/2} K_{3/2}(2 pi j r), truncated at relative `tol`.
inline double r_kernel_sum(double r, double tol) {
  const double x1 = 2.0 * constants::pi * r;
  CompensatedSum<double> s;
  for (int j = 1;; ++j) {
    const double x = x1 * j;
    if (x > bessel_underflow_x) break;
    s += std::pow(j / r, 1.5) * bessel_k(BesselOrder::ThreeHalves, x);
    // (j/r)^{3/2} K_{3/2}(2 pi j r) = j e^{-2 pi j r} (1 + 1/(2 pi j r)) / (2 r^2)
    const double next = j + 1.0;
    const double tail = (1.0 + 1.0 / (x1 * next)) / (2.0 * r * r) * linear_exp_tail(x1, next);
    if (tail <= 0.25 * tol * std::abs(s.value())) break;
  }
  return s.value();
}

} // namespace detail

/// R(z1, z2) to relative tolerance `tol`. The (l, p) lattice is traversed in
/// shells of increasing r of width 1/(2 pi), so that each completed shell
/// leaves a tail bounded by a geometric series.
inline double lattice_r(double z1, double z2, double tol, const ToleranceConfig& cfg = {}) {
  detail::check_lattice_argument("lattice_r", z1, tol, cfg);
  detail::check_lattice_argument("lattice_r", z2, tol, cfg);

  const double width = 1.0 / (2.0 * constants::pi);
  const double half_diag = 0.5 * std::hypot(z1, z2);
  const auto edge = [width](std::int64_t k) { return static_cast<double>(k) * width; };

  CompensatedSum<double> total;
  std::int64_t visited = 0;
  const auto first_shell = static_cast<std::int64_t>(std::floor(std::min(z1, z2) / width));
  for (std::int64_t k = first_shell;; ++k) {
    const double lo = edge(k);
    const double hi = edge(k + 1);
    const double lo2 = lo * lo;
    const double hi2 = hi * hi;
    // Quadrant l, p >= 0; axis points have two images, interior points four.
    const auto l_max = static_cast<std::int64_t>(std::floor(hi / z1));
    for (std::int64_t l = 0; l <= l_max; ++l) {
      const double lz = l * z1;
      const double lz2 = lz * lz;
      const double rem_lo = lo2 - lz2;
      std::int64_t p_start = rem_lo > 0.0 ? static_cast<std::int64_t>(std::ceil(std::sqrt(rem_lo) / z2)) - 1 : 0;
      p_start = std::max<std::int64_t>(p_start, 0);
      const double rem_hi = hi2 - lz2;
      if (rem_hi <= 0.0) continue;
      const auto p_end = static_cast<std::int64_t>(std::floor(std::sqrt(rem_hi) / z2)) + 1;
      for (std::int64_t p = p_start; p <= p_end; ++p) {
        if (l == 0 && p == 0) continue;
        const double pz = p * z2;
        const double r2 = lz2 + pz * pz;
        if (r2 < lo2 || r2 >= hi2) continue;
        if (++visited > cfg.max_points) throw ConvergenceError("lattice_r", 1.0, tol);
        const double weight = (l > 0 && p > 0) ? 4.0 : 2.0;
        total += weight * detail::r_kernel_sum(std::sqrt(r2), tol);
      }
    }

    // Remaining points have r >= R = (k+1) width. Each contributes at most
    // C e^{-2 pi r} / r^2, and the lattice holds at most pi (rho + d)^2 / (z1 z2)
    // points inside radius rho.
    const double big_r = hi;
    if (big_r <= 0.0) continue;
    const double q = -std::expm1(-2.0 * constants::pi * big_r);
    const double c_bound = 0.5 * (1.0 + 1.0 / (2.0 * constants::pi * big_r)) / (q * q);
    const double count_ratio = std::pow(edge(k + 2) + half_diag, 2) / (big_r * big_r);
    const double tail = constants::pi / (z1 * z2) * count_ratio * c_bound *
                        exp_tail_bound(1.0, 1.0, static_cast<double>(k + 1));
    if (tail <= 0.5 * tol * std::abs(total.value())) break;
    if (2.0 * constants::pi * big_r > detail::bessel_underflow_x) break;
  }
  return z1 * z2 / 8.0 * total.value();
}

} // namespace casimir
