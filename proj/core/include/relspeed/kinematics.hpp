#pragma once

#include "relspeed/errors.hpp"

namespace relspeed {

// Speed as a fraction of lightspeed, 0 <= beta < 1.
//
// Alongside the plain value this type carries the gap 1 - beta explicitly.
// Planning for large workloads routinely lands within 1e-17 of lightspeed,
// where the plain double rounds to 1.0 and every 1 - beta^2 expression
// collapses to zero; the stored gap keeps gamma, the Bondi factor and the
// rapidity accurate out to gamma ~ 1e150.
class Beta {
 public:
  // Smallest representable distance below lightspeed. Below this the Lorentz
  // factor leaves the double range and the request is reported as saturated.
  static constexpr double min_gap = 1e-300;

  // From the speed itself. Requires 0 <= beta < 1.
  static Beta from_value(double beta);

  // From the distance below lightspeed, gap = 1 - beta. Requires
  // min_gap <= gap <= 1; gaps below min_gap raise saturation_error.
  static Beta from_gap(double gap);

  double value() const { return value_; }
  double gap() const { return gap_; }

 private:
  Beta(double value, double gap) : value_(value), gap_(gap) {}

  double value_;
  double gap_;
};

struct KinematicState {
  Beta beta;
  double gamma;     // 1 / sqrt(1 - beta^2)
  double rapidity;  // atanh(beta)
  double k;         // Bondi factor sqrt((1 + beta) / (1 - beta)) = e^rapidity
};

// gamma, rapidity and Bondi factor of one speed, each computed from the
// lightspeed gap so they stay accurate arbitrarily close to c.
KinematicState kinematic_state(Beta beta);

// Speed with Bondi factor k: beta = (k^2 - 1) / (k^2 + 1). Requires k >= 1.
Beta beta_of_k(double k);

// Lorentz factor alone, evaluated as 1 / sqrt(gap * (2 - gap)).
double gamma_of_beta(Beta beta);

}  // namespace relspeed
