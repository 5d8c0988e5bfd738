#pragma once

// Mathematical and physical constants. Physical values are CODATA 2018,
// exact in the 2019 SI; nothing else in the library redefines them.

#include <numbers>

namespace casimir::constants {

inline constexpr double pi = std::numbers::pi;

/// Riemann zeta(3), Apery's constant.
inline constexpr double zeta3 = 1.2020569031595942853997381615114;

inline constexpr double hbar = 1.054571817e-34;         // J s
inline constexpr double speed_of_light = 299792458.0;   // m / s
inline constexpr double hbar_c = hbar * speed_of_light; // J m
inline constexpr double k_boltzmann = 1.380649e-23;     // J / K

} // namespace casimir::constants
