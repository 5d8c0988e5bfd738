#pragma once

// Shell-ordered summation over positive-orthant lattices
//
//   S = sum_{n_i >= 1} term(n, x),   x = sqrt(sum_i beta_i^2 n_i^2),
//
// for terms bounded by |term| <= A x^m e^{-x} / (1 - e^{-x}). Points are
// visited in shells k <= x < k + 1. After shell K the remaining points all
// have x >= K + 1, at most V_D rho^D / (2^D prod beta_i) of them lie below
// rho, and the tail is bounded by a geometric series in the shell index.

#include <casimir/constants.hpp>
#include <casimir/error.hpp>
#include <casimir/specfun.hpp>
#include <casimir/summation.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace casimir {

struct TermEnvelope {
  double coeff = 1.0; // A
  int degree = 0;     // m
};

struct ShellSumOptions {
  double rel_tol = 1e-10;
  /// Absolute floor for the stopping rule, so sums that are themselves
  /// (near) zero terminate.
  double abs_floor = 1e-30;
  std::int64_t max_points = 100'000'000;
};

namespace detail {

/// Upper bound on the contribution of all points with x >= K + 1.
template <std::size_t D>
double orthant_tail_bound(const std::array<double, D>& betas, TermEnvelope env, std::int64_t last_shell) {
  double beta_prod = 1.0;
  for (double b : betas) beta_prod *= b;
  const double ball = D == 1 ? 2.0 : D == 2 ? constants::pi : 4.0 * constants::pi / 3.0;
  const double count_coeff = ball / (std::pow(2.0, static_cast<double>(D)) * beta_prod);
  const double r = static_cast<double>(last_shell) + 1.0;
  const double power = static_cast<double>(D) + env.degree;
  // Consecutive terms (k+1)^p e^{-k} shrink at least by e^{-rate} for k >= K+1.
  const double rate = 1.0 - power * std::log((r + 2.0) / (r + 1.0));
  if (!(rate > 0.0)) return std::numeric_limits<double>::infinity();
  const double first = std::pow(r + 1.0, power) * std::exp(-r);
  return count_coeff * env.coeff / -std::expm1(-r) * exp_tail_bound(first, rate, 0.0);
}

} // namespace detail

/// Sums `term(indices, x)` over the positive orthant in shells of unit width
/// in x. Throws ConvergenceError if `max_points` is exhausted first.
template <std::size_t D, typename Term>
double orthant_shell_sum(const std::array<double, D>& betas, Term&& term, TermEnvelope env,
                         const ShellSumOptions& opt, const char* series) {
  static_assert(D >= 1 && D <= 3);
  double x_min2 = 0.0;
  for (double b : betas) {
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError(std::string(series) + ": reduced frequencies must be positive");
    x_min2 += b * b;
  }
  const double x_min = std::sqrt(x_min2);
  // Every term carries e^{-x}; past this point all of them underflow.
  if (x_min > 800.0) return 0.0;

  CompensatedSum<double> total;
  std::int64_t visited = 0;
  std::array<std::int64_t, D> idx{};

  const auto visit = [&](double x2, double lo2, double hi2) {
    if (x2 < lo2 || x2 >= hi2) return;
    if (++visited > opt.max_points) {
      throw ConvergenceError(series, std::numeric_limits<double>::infinity(), opt.rel_tol);
    }
    total += term(idx, std::sqrt(x2));
  };

  // Innermost index range whose points may fall in [lo, hi), given the
  // partial squared radius s2 of the other indices.
  const auto last_axis = [&](double s2, double lo2, double hi2) {
    const double beta = betas[D - 1];
    const double rem_hi = hi2 - s2;
    if (rem_hi <= 0.0) return;
    const double rem_lo = lo2 - s2;
    std::int64_t start = rem_lo > 0.0 ? static_cast<std::int64_t>(std::ceil(std::sqrt(rem_lo) / beta)) - 1 : 1;
    if (start < 1) start = 1;
    const auto stop = static_cast<std::int64_t>(std::floor(std::sqrt(rem_hi) / beta)) + 1;
    for (std::int64_t n = start; n <= stop; ++n) {
      idx[D - 1] = n;
      const double bn = beta * static_cast<double>(n);
      visit(s2 + bn * bn, lo2, hi2);
    }
  };

  for (auto k = static_cast<std::int64_t>(std::floor(x_min));; ++k) {
    const double lo = static_cast<double>(k);
    const double hi = lo + 1.0;
    const double lo2 = lo * lo;
    const double hi2 = hi * hi;
    if constexpr (D == 1) {
      last_axis(0.0, lo2, hi2);
    } else if constexpr (D == 2) {
      for (std::int64_t n = 1;; ++n) {
        const double bn = betas[0] * static_cast<double>(n);
        const double s2 = bn * bn;
        if (s2 + betas[1] * betas[1] >= hi2) break;
        idx[0] = n;
        last_axis(s2, lo2, hi2);
      }
    } else {
      for (std::int64_t n = 1;; ++n) {
        const double bn = betas[0] * static_cast<double>(n);
        const double s2n = bn * bn;
        if (s2n + betas[1] * betas[1] + betas[2] * betas[2] >= hi2) break;
        idx[0] = n;
        for (std::int64_t l = 1;; ++l) {
          const double bl = betas[1] * static_cast<double>(l);
          const double s2 = s2n + bl * bl;
          if (s2 + betas[2] * betas[2] >= hi2) break;
          idx[1] = l;
          last_axis(s2, lo2, hi2);
        }
      }
    }

    const double tail = detail::orthant_tail_bound(betas, env, k);
    const double scale = std::max(std::abs(total.value()), opt.abs_floor);
    if (tail <= opt.rel_tol * scale) break;
  }
  return total.value();
}

} // namespace casimir
