#pragma once

// Finite-temperature Casimir free energy, force, internal energy and entropy
// of an ideal-metal box.
//
// Natural units hbar = c = 1 throughout; the thermal energy k_B T is carried
// as kT in 1/length, in the same length unit as the geometry. The physical
// free energy is
//
//   F = E0 + DeltaT F0 - V f_bb - alpha1 (kT)^3 - alpha2 (kT)^2,
//
// with DeltaT F0 = kT sum_J ln(1 - exp(-omega_J / kT)) over the cavity modes.

#include <casimir/boxzero.hpp>
#include <casimir/constants.hpp>
#include <casimir/error.hpp>
#include <casimir/geometry.hpp>
#include <casimir/shells.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>

namespace casimir {

/// Absolute temperature expressed as kT = k_B T / (hbar c).
class ThermalPoint {
public:
  /// kT in 1/length (natural units). kT = 0 is the exact zero-temperature case.
  explicit ThermalPoint(double kT) : kT_(kT) {
    if (!(kT >= 0.0) || !std::isfinite(kT)) throw DomainError("ThermalPoint: temperature must be finite and >= 0");
  }

  /// From kelvin, for geometry measured in units of `length_unit_m` meters.
  static ThermalPoint from_kelvin(double kelvin, double length_unit_m = 1.0) {
    if (!(kelvin >= 0.0)) throw DomainError("ThermalPoint: temperature must be >= 0 K");
    return ThermalPoint(constants::k_boltzmann * kelvin / constants::hbar_c * length_unit_m);
  }

  static ThermalPoint zero() { return ThermalPoint(0.0); }

  double kT() const noexcept { return kT_; }
  bool is_zero() const noexcept { return kT_ == 0.0; }
  /// 1/kT; +infinity at T = 0.
  double beta() const noexcept { return is_zero() ? std::numeric_limits<double>::infinity() : 1.0 / kT_; }

  /// (pi beta / a, pi beta / b, pi beta / c).
  std::array<double, 3> reduced(const BoxGeometry& g) const {
    const double pb = constants::pi * beta();
    return {pb / g.a(), pb / g.b(), pb / g.c()};
  }

  /// t = T_eff / T with k_B T_eff = hbar c / (2 side).
  double reduced_t(double side) const noexcept {
    return is_zero() ? std::numeric_limits<double>::infinity() : 1.0 / (2.0 * side * kT_);
  }

private:
  double kT_;
};

/// Cavity eigenfrequency pi sqrt(n^2/a^2 + l^2/b^2 + p^2/c^2). Indices are
/// >= 1, except that one of them may be 0 (the electromagnetic two-index modes).
inline double mode_frequency(std::int64_t n, std::int64_t l, std::int64_t p, const BoxGeometry& g) {
  const int zeros = (n == 0) + (l == 0) + (p == 0);
  if (n < 0 || l < 0 || p < 0 || zeros > 1) throw DomainError("mode_frequency: indices must be >= 1 (at most one zero)");
  const double u = n / g.a(), v = l / g.b(), w = p / g.c();
  return constants::pi * std::sqrt(u * u + v * v + w * w);
}

// --- mode sums --------------------------------------------------------------

/// One family of modes: the axes whose indices run over n >= 1 (the others
/// are fixed at 0) and its degeneracy.
struct ModeFamily {
  std::array<int, 3> axes;
  int dims;
  double weight;
};

inline std::span<const ModeFamily> mode_families(FieldKind field) {
  static constexpr std::array<ModeFamily, 1> scalar{{{{0, 1, 2}, 3, 1.0}}};
  // Transverse modes: both polarizations when all indices are nonzero, one
  // when exactly one index vanishes.
  static constexpr std::array<ModeFamily, 4> em{{
      {{0, 1, 2}, 3, 2.0},
      {{1, 2, 0}, 2, 1.0},
      {{0, 1, 0}, 2, 1.0},
      {{0, 2, 0}, 2, 1.0},
  }};
  if (field == FieldKind::ScalarDirichlet) return scalar;
  return em;
}

namespace detail {

template <typename Term>
double family_sum(const ModeFamily& fam, const std::array<double, 3>& betas, Term&& term, TermEnvelope env,
                  const ShellSumOptions& opt, const char* series) {
  if (fam.dims == 3) {
    return orthant_shell_sum<3>({betas[fam.axes[0]], betas[fam.axes[1]], betas[fam.axes[2]]},
                                [&](const std::array<std::int64_t, 3>& i, double x) { return term(i[0], x); }, env, opt,
                                series);
  }
  return orthant_shell_sum<2>({betas[fam.axes[0]], betas[fam.axes[1]]},
                              [&](const std::array<std::int64_t, 2>& i, double x) { return term(i[0], x); }, env, opt,
                              series);
}

inline ShellSumOptions shell_options(const ToleranceConfig& cfg) {
  return {.rel_tol = cfg.rel_tol, .abs_floor = 1e-30, .max_points = cfg.max_points};
}

inline double log_occupation(double x) { return std::log1p(-std::exp(-x)); }
inline double bose(double x) { return 1.0 / std::expm1(x); }

} // namespace detail

/// sum over the modes of `field` of ln(1 - e^{-x}), x = sqrt(sum beta_i^2 n_i^2):
/// X(beta_a, beta_b, beta_c) for the scalar field, Y for the electromagnetic one.
inline double reduced_log_sum(FieldKind field, const std::array<double, 3>& betas, const ToleranceConfig& cfg = {}) {
  const auto opt = detail::shell_options(cfg);
  CompensatedSum<double> s;
  for (const auto& fam : mode_families(field)) {
    s += fam.weight * detail::family_sum(
                          fam, betas, [](std::int64_t, double x) { return detail::log_occupation(x); }, {1.0, 0}, opt,
                          field == FieldKind::ScalarDirichlet ? "thermal_raw(X)" : "thermal_raw(Y)");
  }
  return s.value();
}

/// Unrenormalized thermal correction kT * X (scalar) or kT * Y (EM); exactly 0 at T = 0.
inline double thermal_raw(const BoxGeometry& g, FieldKind field, const ThermalPoint& tp, const ToleranceConfig& cfg = {}) {
  if (tp.is_zero()) return 0.0;
  return tp.kT() * reduced_log_sum(field, tp.reduced(g), cfg);
}

/// Blackbody free-energy density, -pi^2 (kT)^4 / 90 per scalar degree of freedom.
inline double blackbody_density(const ThermalPoint& tp, FieldKind field) {
  const double t2 = tp.kT() * tp.kT();
  const double per_dof = -constants::pi * constants::pi * t2 * t2 / 90.0;
  return field == FieldKind::ScalarDirichlet ? per_dof : 2.0 * per_dof;
}

/// Internal-energy density u = -T^2 d(f/T)/dT of the blackbody term.
/// f is a pure (kT)^4 power, so u = -3 f.
inline double blackbody_internal_energy_density(const ThermalPoint& tp, FieldKind field) {
  return -3.0 * blackbody_density(tp, field);
}

struct SubtractionCoefficients {
  double alpha1;       // length^2, multiplies (kT)^3
  double alpha2;       // length, multiplies (kT)^2
  double bb_prefactor; // pi^2/90 (scalar) or pi^2/45 (EM), multiplies V (kT)^4
};

inline SubtractionCoefficients subtraction_coeffs(const BoxGeometry& g, FieldKind field) {
  using constants::pi;
  if (field == FieldKind::ScalarDirichlet) {
    return {constants::zeta3 * (g.a() * g.c() + g.b() * g.c() + g.a() * g.b()) / (4.0 * pi), -pi * g.side_sum() / 24.0,
            pi * pi / 90.0};
  }
  return {0.0, pi * g.side_sum() / 12.0, pi * pi / 45.0};
}

/// Heat-kernel coefficient of a wedge of opening angle theta (edge contribution).
inline double wedge_heat_kernel_coeff(double theta) {
  if (!(theta > 0.0)) throw DomainError("wedge_heat_kernel_coeff: angle must be positive");
  return (constants::pi * constants::pi - theta * theta) / (6.0 * theta);
}

struct HeatKernelCoefficients {
  double a_half; // -sqrt(pi) S / 2
  double a_one;  // 4 c1(pi/2) (a + b + c)
};

inline HeatKernelCoefficients heat_kernel_coeffs(const BoxGeometry& g) {
  return {-std::sqrt(constants::pi) * g.surface_area() / 2.0,
          4.0 * wedge_heat_kernel_coeff(constants::pi / 2.0) * g.side_sum()};
}

/// Components of the physical free energy, each with the sign it carries in
/// `total`; `total` is their sum in declaration order.
struct EnergyBreakdown {
  double e0_ren = 0.0;
  double thermal_raw = 0.0;
  double bb_term = 0.0;     // -V f_bb
  double alpha1_term = 0.0; // -alpha1 (kT)^3
  double alpha2_term = 0.0; // -alpha2 (kT)^2
  double total = 0.0;

  static double sum(double e0, double raw, double bb, double a1, double a2) { return e0 + raw + bb + a1 + a2; }
};

inline EnergyBreakdown free_energy(const BoxGeometry& g, FieldKind field, const ThermalPoint& tp,
                                   const ToleranceConfig& cfg = {}) {
  EnergyBreakdown out;
  out.e0_ren = e0(g, field, cfg);
  if (!tp.is_zero()) {
    const double t = tp.kT();
    const auto sc = subtraction_coeffs(g, field);
    out.thermal_raw = thermal_raw(g, field, tp, cfg);
    out.bb_term = sc.bb_prefactor * g.volume() * t * t * t * t;
    out.alpha1_term = -sc.alpha1 * t * t * t;
    out.alpha2_term = -sc.alpha2 * t * t;
  }
  out.total = EnergyBreakdown::sum(out.e0_ren, out.thermal_raw, out.bb_term, out.alpha1_term, out.alpha2_term);
  return out;
}

/// Components of the force -dF/da on the faces normal to a, each with the
/// sign it carries in `total`.
struct ForceBreakdown {
  double f0 = 0.0;          // -dE0/da
  double mode_sum = 0.0;    // (pi^2/a^3) sum n^2 / (omega (e^{beta omega} - 1)), with degeneracies
  double bb_term = 0.0;     // -bb_prefactor b c (kT)^4
  double alpha1_term = 0.0; // (d alpha1/da) (kT)^3
  double alpha2_term = 0.0; // (d alpha2/da) (kT)^2
  double total = 0.0;

  double thermal() const { return mode_sum + bb_term + alpha1_term + alpha2_term; }
};

/// Temperature-dependent part of the force, summed term by term.
inline ForceBreakdown thermal_force_terms(const BoxGeometry& g, FieldKind field, const ThermalPoint& tp,
                                          const ToleranceConfig& cfg = {}) {
  ForceBreakdown out;
  if (tp.is_zero()) return out;
  using constants::pi;
  const double t = tp.kT();
  const double a = g.a();
  const auto betas = tp.reduced(g);
  const auto opt = detail::shell_options(cfg);

  // n^2 / (omega (e^x - 1)) with omega = x kT; n is the a-axis index, which is
  // the first axis of every family that contains it.
  CompensatedSum<double> s;
  for (const auto& fam : mode_families(field)) {
    if (fam.axes[0] != 0) continue;
    s += fam.weight * detail::family_sum(
                          fam, betas,
                          [](std::int64_t n, double x) {
                            const double nn = static_cast<double>(n);
                            return nn * nn / x * detail::bose(x);
                          },
                          {1.0 / (betas[0] * betas[0]), 1}, opt, "force_x(mode sum)");
  }
  out.mode_sum = pi * pi / (a * a * a * t) * s.value();

  const double t2 = t * t;
  if (field == FieldKind::ScalarDirichlet) {
    out.bb_term = -pi * pi / 90.0 * g.b() * g.c() * t2 * t2;
    out.alpha1_term = constants::zeta3 * (g.b() + g.c()) / (4.0 * pi) * t2 * t;
    out.alpha2_term = -pi / 24.0 * t2;
  } else {
    out.bb_term = -pi * pi / 45.0 * g.b() * g.c() * t2 * t2;
    out.alpha2_term = pi / 12.0 * t2;
  }
  return out;
}

/// Force -dF/da. The zero-temperature part is a finite difference of E0; the
/// thermal part is summed analytically.
inline ForceBreakdown force_x(const BoxGeometry& g, FieldKind field, const ThermalPoint& tp,
                              const ToleranceConfig& cfg = {}) {
  ForceBreakdown out = thermal_force_terms(g, field, tp, cfg);
  out.f0 = e0_force_x(g, field, cfg);
  out.total = out.f0 + out.thermal();
  return out;
}

/// Internal energy U = -T^2 d(F/T)/dT, from term-wise derivatives:
/// U = E0 + sum_J omega_J / (e^{beta omega_J} - 1) - 3 (bb term) - 2 (alpha1 term) - (alpha2 term).
inline double internal_energy(const BoxGeometry& g, FieldKind field, const ThermalPoint& tp,
                              const ToleranceConfig& cfg = {}) {
  const double e = e0(g, field, cfg);
  if (tp.is_zero()) return e;
  const double t = tp.kT();
  const auto betas = tp.reduced(g);
  const auto opt = detail::shell_options(cfg);
  CompensatedSum<double> s;
  for (const auto& fam : mode_families(field)) {
    s += fam.weight * detail::family_sum(
                          fam, betas, [](std::int64_t, double x) { return x * detail::bose(x); }, {1.0, 1}, opt,
                          "internal_energy(mode sum)");
  }
  const auto sc = subtraction_coeffs(g, field);
  const double t2 = t * t;
  CompensatedSum<double> u(e);
  u += t * s.value();
  u += -3.0 * sc.bb_prefactor * g.volume() * t2 * t2;
  u += 2.0 * sc.alpha1 * t2 * t;
  u += sc.alpha2 * t2;
  return u.value();
}

/// Entropy in units of k_B, (U - F) / (k_B T).
inline double entropy(const BoxGeometry& g, FieldKind field, const ThermalPoint& tp, const ToleranceConfig& cfg = {}) {
  if (tp.is_zero()) throw DomainError("entropy: requires T > 0");
  const double u = internal_energy(g, field, tp, cfg);
  const double f = free_energy(g, field, tp, cfg).total;
  return (u - f) / tp.kT();
}

struct ThermoState {
  EnergyBreakdown free;
  double internal_energy;
  double entropy; // units of k_B
};

inline ThermoState thermodynamics(const BoxGeometry& g, FieldKind field, const ThermalPoint& tp,
                                  const ToleranceConfig& cfg = {}) {
  if (tp.is_zero()) throw DomainError("thermodynamics: requires T > 0");
  ThermoState st{free_energy(g, field, tp, cfg), internal_energy(g, field, tp, cfg), 0.0};
  st.entropy = (st.internal_energy - st.free.total) / tp.kT();
  return st;
}

/// High-temperature polynomial asymptote of the unrenormalized thermal
/// correction (logarithmic remainder omitted).
inline double asymptotic_thermal(const BoxGeometry& g, FieldKind field, const ThermalPoint& tp) {
  if (tp.is_zero()) throw DomainError("asymptotic_thermal: requires T > 0");
  using constants::pi;
  const double t = tp.kT();
  const double t2 = t * t;
  if (field == FieldKind::ScalarDirichlet) {
    return -pi / 24.0 * t2 * g.side_sum() +
           constants::zeta3 / (4.0 * pi) * (g.a() * g.c() + g.b() * g.c() + g.a() * g.b()) * t2 * t -
           pi * pi / 90.0 * t2 * t2 * g.volume();
  }
  return pi / 12.0 * t2 * g.side_sum() - pi * pi / 45.0 * t2 * t2 * g.volume();
}

} // namespace casimir
