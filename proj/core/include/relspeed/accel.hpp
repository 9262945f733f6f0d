#pragma once

#include <array>
#include <optional>

#include "relspeed/inertial.hpp"

namespace relspeed {

// One stretch of constant proper acceleration. accel is signed along the
// travel axis, in units of c per unit proper time; duration is proper time.
struct WorldlineSegment {
  double accel = 0.0;
  double duration = 0.0;
};

// Lab clock and displacement of hyperbolic motion started from rest.
struct HyperbolicPoint {
  double coordinate_time;  // t(tau) = sinh(a tau) / a
  double displacement;     // x(tau) - x(0) = (cosh(a tau) - 1) / a
};

// The three clocks of one constant-acceleration stretch from rest, any one
// of which determines the other two.
struct ClockSet {
  double proper_time;
  double coordinate_time;
  double distance;
};

// Four-leg return itinerary (speed up, brake to rest at the far point, speed
// up homeward, brake to rest at the start) plus closed-form journey figures
// and the photon-rocket fuel bill.
struct AccelPlan {
  std::optional<ComputationSpec> spec;
  double accel = 0.0;  // leg magnitude g; zero only for order-1 plans
  std::array<WorldlineSegment, 4> legs{};
  double proper_time = 0.0;      // T, all four legs
  double coordinate_time = 0.0;  // lab clock, 4 sinh(gT/4) / g
  Beta max_beta = Beta::from_value(0.0);  // reached at the end of leg i

  // Far-point distance from composing legs i and ii: 2 (cosh(gT/4) - 1) / g.
  double max_distance = 0.0;
  // What one uninterrupted T/2 burn would reach: (cosh(gT/2) - 1) / g.
  // Sometimes quoted as the far-point distance; kept so callers can show
  // the two disagree.
  double max_distance_single_burn = 0.0;

  double fuel_single_leg = 0.0;  // multiples of m0, one T/4 leg
  double fuel_full_path = 0.0;   // multiples of m0, all four burns compounded
};

// Propellant ledger of a photon rocket holding proper acceleration a for
// proper time tau: the craft converts fuel mass to collimated light, so the
// initial mass m0 + fuel decays as m0 e^(a tau / c).
struct FuelAccount {
  double fuel_mass;        // M = m0 (e^(a tau) - 1), same unit as payload
  double radiated_energy;  // E = m0 sinh(a tau), in units of payload * c^2
  double payload;          // m0

  // Mass claimed by the distance-based variant
  // M = m0 (a d + sqrt((a d)^2 - 1) - 1), which disagrees with the
  // conservation-law result and has no value while a d < 1. Kept so callers
  // can surface the discrepancy.
  std::optional<double> distance_form_mass;
};

// Hyperbolic-motion closed forms. Require a > 0 and tau >= 0.
HyperbolicPoint worldline_point(double accel, double tau);
Beta velocity_at(double accel, double tau);  // tanh(a tau), gap kept exact
double gamma_at(double accel, double tau);   // cosh(a tau)

// Clock conversions along one stretch from rest; each inverts the closed
// forms (tau = asinh(a t) / a, cosh(a tau) = a d + 1).
ClockSet clocks_from_proper(double accel, double tau);
ClockSet clocks_from_coordinate(double accel, double t);
ClockSet clocks_from_distance(double accel, double distance);

// Proper acceleration that packs the workload's coordinate budget K into its
// proper budget K^(1/n): the unique root of asinh(a K) / a = K^(1/n).
// Returns 0 for order 1 (no thrust needed). Requires queries >= 2 when
// order > 1; throws infeasibility_error if bracket growth fails.
double solve_acceleration(const ComputationSpec& spec);

// Four-leg itinerary for total proper time T at leg magnitude g > 0.
AccelPlan path2_itinerary(double g, double proper_time);

// solve_acceleration composed with the itinerary; order-1 specs degenerate
// to a coasting plan with zero thrust and zero fuel.
AccelPlan plan_accel(const ComputationSpec& spec);

// Fuel for one constant-thrust stretch, and for the full four-leg path whose
// burns compound to m0 (e^(g T) - 1) regardless of thrust direction.
FuelAccount fuel_single_leg(double accel, double tau, double rest_mass);
double fuel_full_path(double g, double proper_time, double rest_mass);

// Clock-rate ratio 1 - g h / c^2 between ground and height h, SI inputs.
// First-order formula; throws validity_error once g h / c^2 >= 0.01.
double gravitational_rate(double g_si, double height_m);

}  // namespace relspeed
