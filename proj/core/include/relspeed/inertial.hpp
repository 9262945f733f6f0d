#pragma once

#include <array>
#include <cstdint>

#include "relspeed/kinematics.hpp"

namespace relspeed {

// A black-box workload: N queries of fixed duration, to be finished within
// the nth root of its sequential running time on the traveller's own clock.
struct ComputationSpec {
  std::int64_t queries = 1;  // N
  double query_time = 1.0;   // duration of one query (1 in natural units)
  double order = 1.0;        // n, the speedup exponent

  // Sequential (lab-frame) running time, query_time * queries.
  double coordinate_budget() const;

  // Traveller budget T = (query_time * queries)^(1/n).
  double proper_budget() const;

  // Throws domain_error unless queries >= 1, query_time > 0, order >= 1,
  // and the coordinate budget exceeds 1 whenever order > 1 (the speedup
  // exponent is read off a logarithm of the budget, singular at 1).
  void validate() const;
};

struct InertialPlan {
  ComputationSpec spec;
  double proper_time;      // T, traveller clock
  double coordinate_time;  // T^n = query_time * queries, lab clock
  KinematicState state;
  double distance;      // lab-frame path length, in light-(query times)
  double energy_ratio;  // E / (m0 c^2), equal to gamma for a cruise
  double rest_mass;     // payload m0 (kg in SI mode, 1 otherwise)
};

// Energy and momentum of the cruising payload in units of m0 c: p[0] = gamma,
// p[1] = gamma beta along the travel axis, transverse components zero.
struct FourMomentum {
  std::array<double, 4> p{1.0, 0.0, 0.0, 0.0};
};

// Cruise speed that dilates a coordinate budget T^n into proper time T:
// beta = sqrt(1 - T^(2 - 2n)), returned with its lightspeed gap intact.
Beta beta_required(double proper_time, double order);

// Full constant-velocity itinerary for a workload.
InertialPlan plan_inertial(const ComputationSpec& spec, double rest_mass = 1.0);

// Speedup exponent from a Bondi factor: n = 1 + log((k + 1/k)/2) / log T.
// The mean is evaluated as 1 + (k-1)^2/(2k) so it survives k -> 1.
double order_from_k(double k, double proper_time);

// Bondi factor needed for exponent n: k = T^(n-1) (1 + sqrt(1 - T^(2-2n))).
double k_from_order(double order, double proper_time);

// Exponent from the lab-frame distance d covered in proper time T:
// n = 1 + log(1 + (d/T)^2) / log T^2.
double order_from_distance(double distance, double proper_time);

// Exponent from an energy budget: n = 1 + log(E / m0 c^2) / log T.
double order_from_energy(double energy_ratio, double proper_time);

// E / (m0 c^2) = (query_time * queries)^(1 - 1/n), evaluated in log space;
// exact square root at exponent 1/2.
double energy_required(const ComputationSpec& spec);

// Lab-frame four-momentum of the cruising payload.
FourMomentum four_momentum(const InertialPlan& plan);

}  // namespace relspeed
