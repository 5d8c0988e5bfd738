#pragma once

// Electromagnetic Casimir free energy and pressure per unit area between two
// parallel ideal-metal planes at separation a and temperature kT.
// Natural units: energy per area in 1/length^3, pressure in 1/length^4.

#include <casimir/constants.hpp>
#include <casimir/error.hpp>
#include <casimir/geometry.hpp>
#include <casimir/richardson.hpp>
#include <casimir/specfun.hpp>
#include <casimir/summation.hpp>
#include <casimir/thermal.hpp>

#include <cmath>
#include <cstdint>
#include <limits>

namespace casimir {

struct PlatesConfig {
  double separation;
  ThermalPoint temperature = ThermalPoint::zero();

  PlatesConfig(double a, ThermalPoint tp) : separation(a), temperature(tp) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("PlatesConfig: separation must be positive");
  }

  double reduced_t() const { return temperature.reduced_t(separation); }
  PlatesConfig with_separation(double a) const { return {a, temperature}; }
};

inline constexpr double plates_t_switch = 0.5;

namespace detail {

inline double plates_casimir(double a) { return -constants::pi * constants::pi / (720.0 * a * a * a); }

/// Low-temperature representation: the bracket multiplying -pi^2/(720 a^3),
/// with coth(x) = 1 + 2/(e^{2x} - 1) split off so the l-sum starts at
/// zeta(3) and decays like e^{-2 pi l t}.
inline double plates_bracket_low(double t, const ToleranceConfig& cfg, const char* series) {
  using constants::pi;
  const double t2 = t * t, t3 = t2 * t;
  const double rate = 2.0 * pi * t;
  const double em = -std::expm1(-rate);
  const double pref = 2.0 / (t3 * em) + 4.0 * pi / (t2 * em * em);

  CompensatedSum<double> s(constants::zeta3 / t3);
  for (std::int64_t l = 1;; ++l) {
    const double ld = static_cast<double>(l);
    const double x = pi * ld * t;
    const double q = std::exp(-2.0 * x);
    const double sh = std::sinh(x);
    s += 2.0 / (t3 * ld * ld * ld * std::expm1(2.0 * x));
    s += pi / (t2 * ld * ld * sh * sh);
    const double tail = exp_tail_bound(pref, rate, ld + 1.0);
    if (tail <= cfg.rel_tol * std::abs(s.value()) || q == 0.0) break;
    if (l > 10'000) throw ConvergenceError(series, tail / std::abs(s.value()), cfg.rel_tol);
  }
  CompensatedSum<double> bracket(1.0);
  bracket += 45.0 / (pi * pi * pi) * s.value();
  bracket += -1.0 / (t2 * t2);
  return bracket.value();
}

/// High-temperature representation: Matsubara sum over frequencies
/// xi_l = 2 pi l kT with the static term halved. Each frequency contributes
/// sum_m e^{-y}(1 + y)/m^3 with y = 2 pi m l / t; the l-sum is done in
/// closed form.
inline double plates_free_energy_high(const PlatesConfig& cfg_p, const ToleranceConfig& cfg, const char* series) {
  using constants::pi;
  const double a = cfg_p.separation;
  const double kT = cfg_p.temperature.kT();
  const double t = cfg_p.reduced_t();
  const double rate = 2.0 * pi / t;
  const double em = -std::expm1(-rate);
  const double pref = (1.0 + rate) / (em * em);

  CompensatedSum<double> s(constants::zeta3 / 2.0);
  for (std::int64_t m = 1;; ++m) {
    const double md = static_cast<double>(m);
    const double y = rate * md;
    const double q = std::exp(-y);
    const double omq = -std::expm1(-y);
    s += (q / omq + y * q / (omq * omq)) / (md * md * md);
    const double tail = exp_tail_bound(pref, rate, md + 1.0);
    if (tail <= cfg.rel_tol * std::abs(s.value()) || q == 0.0) break;
    if (m > 10'000) throw ConvergenceError(series, tail / std::abs(s.value()), cfg.rel_tol);
  }
  return -kT / (4.0 * pi * a * a) * s.value();
}

} // namespace detail

/// Free energy per unit area. T = 0 gives -pi^2/(720 a^3) exactly.
inline double plates_free_energy(const PlatesConfig& p, const ToleranceConfig& cfg = {}) {
  const double a = p.separation;
  if (p.temperature.is_zero()) return detail::plates_casimir(a);
  const double t = p.reduced_t();
  if (t >= plates_t_switch) return detail::plates_casimir(a) * detail::plates_bracket_low(t, cfg, "plates_free_energy");
  return detail::plates_free_energy_high(p, cfg, "plates_free_energy");
}

/// Low-temperature representation alone (valid for every t > 0, but loses
/// digits to cancellation as t -> 0).
inline double plates_free_energy_low_series(const PlatesConfig& p, const ToleranceConfig& cfg = {}) {
  if (p.temperature.is_zero()) return detail::plates_casimir(p.separation);
  return detail::plates_casimir(p.separation) * detail::plates_bracket_low(p.reduced_t(), cfg, "plates_low_series");
}

/// High-temperature (Matsubara) representation alone; requires T > 0.
inline double plates_free_energy_high_series(const PlatesConfig& p, const ToleranceConfig& cfg = {}) {
  if (p.temperature.is_zero()) throw DomainError("plates_free_energy_high_series: requires T > 0");
  return detail::plates_free_energy_high(p, cfg, "plates_high_series");
}

/// Pressure -dF/da at fixed temperature, by central differences with one
/// Richardson level.
inline double plates_pressure(const PlatesConfig& p, const ToleranceConfig& cfg = {}) {
  const double a = p.separation;
  const auto f = [&](double s) { return plates_free_energy(p.with_separation(s), cfg); };
  const double scale = std::abs(f(a)) / a;
  return -checked_derivative(f, a, cfg.fd_step * a, scale, cfg.richardson_agreement, "plates_pressure");
}

/// Low-temperature free energy with exponentially small terms dropped.
inline double plates_free_energy_low_t(const PlatesConfig& p) {
  using constants::pi;
  const double a = p.separation;
  if (p.temperature.is_zero()) return detail::plates_casimir(a);
  const double r = 1.0 / p.reduced_t();
  return detail::plates_casimir(a) * (1.0 + 45.0 * constants::zeta3 / (pi * pi * pi) * r * r * r - r * r * r * r);
}

/// Low-temperature pressure with exponentially small terms dropped.
inline double plates_pressure_low_t(const PlatesConfig& p) {
  using constants::pi;
  const double a = p.separation;
  const double base = -pi * pi / (240.0 * a * a * a * a);
  if (p.temperature.is_zero()) return base;
  const double r = 1.0 / p.reduced_t();
  return base * (1.0 + r * r * r * r / 3.0);
}

/// Classical (high-temperature) limit of the free energy, -kT zeta(3)/(8 pi a^2).
inline double plates_free_energy_classical(const PlatesConfig& p) {
  const double a = p.separation;
  return -p.temperature.kT() * constants::zeta3 / (8.0 * constants::pi * a * a);
}

/// Classical limit of the pressure, -kT zeta(3)/(4 pi a^3).
inline double plates_pressure_classical(const PlatesConfig& p) {
  const double a = p.separation;
  return -p.temperature.kT() * constants::zeta3 / (4.0 * constants::pi * a * a * a);
}

} // namespace casimir
