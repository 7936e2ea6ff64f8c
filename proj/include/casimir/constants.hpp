#pragma once

#include <numbers>

namespace casimir {

// Photon energies are in eV, lengths in nm. Pressures leave the library in Pa.
struct PhysicalConstants {
  static constexpr double hbar_c = 197.3269804;          // eV nm
  static constexpr double pi = std::numbers::pi;
  static constexpr double pascal_per_ev_nm3 = 1.602176634e8;
};

inline constexpr double kHbarC = PhysicalConstants::hbar_c;
inline constexpr double kPi = PhysicalConstants::pi;
inline constexpr double kPascalPerEvNm3 = PhysicalConstants::pascal_per_ev_nm3;

}  // namespace casimir
