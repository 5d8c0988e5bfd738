#pragma once

// Renormalized zero-temperature Casimir energies of an ideal-metal box, for a
// scalar field with Dirichlet conditions and for the electromagnetic field.
// Energies are in 1/length (hbar = c = 1).

#include <casimir/constants.hpp>
#include <casimir/geometry.hpp>
#include <casimir/lattice.hpp>
#include <casimir/richardson.hpp>

#include <cmath>

namespace casimir {

inline double e0_scalar(const BoxGeometry& g, const ToleranceConfig& cfg = {}) {
  using constants::pi;
  using constants::zeta3;
  const double a = g.a(), b = g.b(), c = g.c();
  const double tol = cfg.rel_tol;
  CompensatedSum<double> e;
  e += -pi * pi * b * c / (1440.0 * a * a * a);
  e += zeta3 * (b + c) / (32.0 * pi * a * a);
  e += -pi / (96.0 * a);
  e += -pi / (2.0 * a) * (lattice_g(b / a, tol, cfg) + lattice_g(c / a, tol, cfg));
  e += -lattice_r(b / a, c / a, tol, cfg) / a;
  return e.value();
}

/// Electromagnetic energy, evaluated with the axis labelling as written:
/// the G term uses c/b and the area-like term zeta(3) c / b^2.
inline double e0_em(const BoxGeometry& g, const ToleranceConfig& cfg = {}) {
  using constants::pi;
  using constants::zeta3;
  const double a = g.a(), b = g.b(), c = g.c();
  const double tol = cfg.rel_tol;
  CompensatedSum<double> e;
  e += -pi * pi * b * c / (720.0 * a * a * a);
  e += -zeta3 * c / (16.0 * pi * b * b);
  e += pi / 48.0 * (1.0 / a + 1.0 / b);
  e += pi / b * lattice_g(c / b, tol, cfg);
  e += -2.0 / a * lattice_r(b / a, c / a, tol, cfg);
  return e.value();
}

inline double e0(const BoxGeometry& g, FieldKind field, const ToleranceConfig& cfg = {}) {
  return field == FieldKind::ScalarDirichlet ? e0_scalar(g, cfg) : e0_em(g, cfg);
}

enum class Side { A, B, C };

/// dE0/d(side) at fixed other sides, by central differences with step
/// cfg.fd_step * side and one Richardson level.
inline double e0_side_derivative(const BoxGeometry& g, FieldKind field, Side side, const ToleranceConfig& cfg = {}) {
  const double x = side == Side::A ? g.a() : side == Side::B ? g.b() : g.c();
  const auto energy_at = [&](double s) {
    switch (side) {
    case Side::A: return e0(g.with_a(s), field, cfg);
    case Side::B: return e0(g.with_b(s), field, cfg);
    case Side::C: return e0(g.with_c(s), field, cfg);
    }
    return 0.0;
  };
  const double scale = std::abs(e0(g, field, cfg)) / x;
  return checked_derivative(energy_at, x, cfg.fd_step * x, scale, cfg.richardson_agreement, "e0_force_x");
}

/// Zero-temperature force on the faces normal to a: -dE0/da.
inline double e0_force_x(const BoxGeometry& g, FieldKind field, const ToleranceConfig& cfg = {}) {
  return -e0_side_derivative(g, field, Side::A, cfg);
}

} // namespace casimir
