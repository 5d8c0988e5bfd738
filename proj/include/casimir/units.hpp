#pragma once

// Conversions between laboratory units (micrometers, kelvin, SI) and the
// natural units of the library. With lengths in meters, natural energies are
// in 1/m and multiply by hbar*c to give joules; forces (1/m^2) give newtons,
// energies per area (1/m^3) give J/m^2 and pressures (1/m^4) give pascals.

#include <casimir/constants.hpp>
#include <casimir/thermal.hpp>

namespace casimir::units {

inline constexpr double meters_per_micrometer = 1e-6;

constexpr double um_to_m(double um) { return um * meters_per_micrometer; }
constexpr double m_to_um(double m) { return m / meters_per_micrometer; }

/// k_B T / (hbar c) in 1/m.
constexpr double kelvin_to_kT(double kelvin) { return constants::k_boltzmann * kelvin / constants::hbar_c; }
constexpr double kT_to_kelvin(double kT) { return kT * constants::hbar_c / constants::k_boltzmann; }

inline ThermalPoint thermal_point_kelvin(double kelvin) { return ThermalPoint::from_kelvin(kelvin, 1.0); }

/// Natural quantity measured in powers of 1/m to its SI value.
constexpr double to_si(double natural) { return natural * constants::hbar_c; }

constexpr double to_joules(double energy_per_m) { return to_si(energy_per_m); }
constexpr double to_newtons(double force_per_m2) { return to_si(force_per_m2); }
constexpr double to_joules_per_m2(double energy_per_m3) { return to_si(energy_per_m3); }
constexpr double to_pascals(double pressure_per_m4) { return to_si(pressure_per_m4); }

} // namespace casimir::units
