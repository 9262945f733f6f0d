#pragma once

namespace relspeed::units {

// Exact SI speed of light. The library itself works in natural units (c = 1,
// times in multiples of the query duration); these constants serve the
// boundary where results are converted to SI.
inline constexpr double speed_of_light = 2.99792458e8;  // m/s
inline constexpr double speed_of_light_sq = speed_of_light * speed_of_light;

}  // namespace relspeed::units

namespace relspeed {

enum class UnitMode { natural, si };

struct UnitSystem {
  UnitMode mode = UnitMode::natural;
  double c = 1.0;  // m/s in SI mode, 1 otherwise

  static UnitSystem natural() { return {UnitMode::natural, 1.0}; }
  static UnitSystem si() { return {UnitMode::si, units::speed_of_light}; }
};

}  // namespace relspeed
