#pragma once

#include <casimir/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string_view>

namespace casimir {

/// Rectangular cavity with sides a, b, c. The core is unit-agnostic: every
/// quantity is homogeneous in the sides, so any consistent length unit works
/// (energies come out in 1/length, forces in 1/length^2, with hbar = c = 1).
class BoxGeometry {
public:
  static constexpr double min_aspect = 1e-6;
  static constexpr double max_aspect = 1e6;

  BoxGeometry(double a, double b, double c) : a_(a), b_(b), c_(c) {
    for (double s : {a, b, c})
      if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("BoxGeometry: sides must be positive and finite");
    for (double r : {b / a, c / a, c / b})
      if (r < min_aspect || r > max_aspect) throw DomainError("BoxGeometry: aspect ratio outside [1e-6, 1e6]");
  }

  static BoxGeometry cube(double side) { return {side, side, side}; }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

  double volume() const noexcept { return a_ * b_ * c_; }
  double surface_area() const noexcept { return 2.0 * (a_ * b_ + b_ * c_ + c_ * a_); }
  double side_sum() const noexcept { return a_ + b_ + c_; }

  BoxGeometry scaled(double lambda) const { return {lambda * a_, lambda * b_, lambda * c_}; }
  BoxGeometry with_a(double a) const { return {a, b_, c_}; }
  BoxGeometry with_b(double b) const { return {a_, b, c_}; }
  BoxGeometry with_c(double c) const { return {a_, b_, c}; }

  friend bool operator==(const BoxGeometry&, const BoxGeometry&) = default;

private:
  double a_;
  double b_;
  double c_;
};

enum class FieldKind { ScalarDirichlet, Electromagnetic };

inline std::string_view to_string(FieldKind f) {
  return f == FieldKind::ScalarDirichlet ? "scalar" : "em";
}

/// Tolerances, budgets and finite-difference settings shared by all series
/// and derivatives.
struct ToleranceConfig {
  /// Relative truncation tolerance of every lattice or mode sum.
  double rel_tol = 1e-10;
  /// Maximum number of lattice points a single series may visit.
  std::int64_t max_points = 100'000'000;
  /// Finite-difference step relative to the differentiated length.
  double fd_step = 1e-4;
  /// Largest accepted relative disagreement between the two Richardson levels.
  double richardson_agreement = 1e-5;
  /// Smallest argument accepted by the G and R lattice sums.
  double lattice_floor = 1e-4;
};

} // namespace casimir
