#include "relspeed/kinematics.hpp"

#include <cmath>

namespace relspeed {

Beta Beta::from_value(double beta) {
  if (!(beta >= 0.0 && beta < 1.0))
    throw domain_error("beta must satisfy 0 <= beta < 1");
  return Beta(beta, 1.0 - beta);
}

Beta Beta::from_gap(double gap) {
  if (!(gap <= 1.0)) throw domain_error("beta must satisfy 0 <= beta < 1");
  if (!(gap >= min_gap))
    throw saturation_error("required speed is indistinguishable from lightspeed");
  return Beta(1.0 - gap, gap);
}

KinematicState kinematic_state(Beta beta) {
  const double gap = beta.gap();
  // 1 - beta^2 = gap (2 - gap): no cancellation however small the gap.
  const double gamma = 1.0 / std::sqrt(gap * (2.0 - gap));
  // atanh is fine below 0.5; past that the gap form takes over.
  const double rapidity = beta.value() < 0.5
                              ? std::atanh(beta.value())
                              : 0.5 * std::log((2.0 - gap) / gap);
  const double k = std::sqrt((2.0 - gap) / gap);
  return {beta, gamma, rapidity, k};
}

Beta beta_of_k(double k) {
  if (!(k >= 1.0) || !std::isfinite(k))
    throw domain_error("bondi factor must satisfy k >= 1");
  // 1 - beta = 2 / (k^2 + 1), keeping the lightspeed gap exact for large k.
  return Beta::from_gap(2.0 / (k * k + 1.0));
}

double gamma_of_beta(Beta beta) {
  const double gap = beta.gap();
  return 1.0 / std::sqrt(gap * (2.0 - gap));
}

}  // namespace relspeed
