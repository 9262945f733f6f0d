#include "relspeed/inertial.hpp"

#include <cmath>

#include "stable.hpp"

namespace relspeed {

namespace {

// Shared guard for the order_from_* family: every one of them divides by
// log(proper_time), so the budget must sit strictly above 1.
void require_log_budget(double proper_time) {
  if (!(proper_time > 1.0) || !std::isfinite(proper_time))
    throw domain_error("proper time budget must exceed 1");
}

void require_order(double order) {
  if (!(order >= 1.0) || !std::isfinite(order))
    throw domain_error("order must be >= 1");
}

}  // namespace

double ComputationSpec::coordinate_budget() const {
  return query_time * static_cast<double>(queries);
}

double ComputationSpec::proper_budget() const {
  return detail::power(coordinate_budget(), 1.0 / order);
}

void ComputationSpec::validate() const {
  if (queries < 1) throw domain_error("queries must be >= 1");
  if (!(query_time > 0.0) || !std::isfinite(query_time))
    throw domain_error("query time must be positive");
  require_order(order);
  if (order > 1.0 && !(coordinate_budget() > 1.0))
    throw domain_error("order > 1 needs a coordinate budget above 1");
}

Beta beta_required(double proper_time, double order) {
  require_order(order);
  if (!(proper_time >= 1.0) || !std::isfinite(proper_time))
    throw domain_error("proper time budget must be >= 1");
  if (order > 1.0 && !(proper_time > 1.0))
    throw domain_error("order > 1 needs a proper time budget above 1");
  // beta^2 = 1 - T^(2-2n). Both beta and its lightspeed gap come out of the
  // exponent directly: q = T^(2-2n) underflows only past gamma ~ 1e150, while
  // gap = q / (1 + beta) never cancels.
  const double expo = (2.0 - 2.0 * order) * std::log(proper_time);
  const double q = std::exp(expo);
  const double beta = std::sqrt(-std::expm1(expo));
  return Beta::from_gap(q / (1.0 + beta));
}

InertialPlan plan_inertial(const ComputationSpec& spec, double rest_mass) {
  spec.validate();
  if (!(rest_mass > 0.0) || !std::isfinite(rest_mass))
    throw domain_error("rest mass must be positive");
  const double coordinate_time = spec.coordinate_budget();
  const double proper_time = spec.proper_budget();
  const KinematicState state =
      kinematic_state(beta_required(proper_time, spec.order));
  return InertialPlan{spec,
                      proper_time,
                      coordinate_time,
                      state,
                      state.beta.value() * coordinate_time,
                      state.gamma,
                      rest_mass};
}

double order_from_k(double k, double proper_time) {
  if (!(k >= 1.0) || !std::isfinite(k))
    throw domain_error("bondi factor must satisfy k >= 1");
  require_log_budget(proper_time);
  // (k + 1/k)/2 = 1 + (k-1)^2/(2k); the right side stays exact as k -> 1.
  const double excess = (k - 1.0) * (k - 1.0) / (2.0 * k);
  return 1.0 + std::log1p(excess) / std::log(proper_time);
}

double k_from_order(double order, double proper_time) {
  require_log_budget(proper_time);
  return kinematic_state(beta_required(proper_time, order)).k;
}

double order_from_distance(double distance, double proper_time) {
  if (!(distance >= 0.0) || !std::isfinite(distance))
    throw domain_error("distance must be >= 0");
  require_log_budget(proper_time);
  const double r = distance / proper_time;
  // log(1 + r^2) via log1p below the r^2 overflow line, asymptote above it.
  const double log_term = r > 1e150 ? 2.0 * std::log(r) : std::log1p(r * r);
  return 1.0 + log_term / (2.0 * std::log(proper_time));
}

double order_from_energy(double energy_ratio, double proper_time) {
  if (!(energy_ratio >= 1.0) || !std::isfinite(energy_ratio))
    throw domain_error("energy ratio must be >= 1");
  require_log_budget(proper_time);
  return 1.0 + std::log(energy_ratio) / std::log(proper_time);
}

double energy_required(const ComputationSpec& spec) {
  spec.validate();
  return detail::power(spec.coordinate_budget(), 1.0 - 1.0 / spec.order);
}

FourMomentum four_momentum(const InertialPlan& plan) {
  const double gamma = plan.state.gamma;
  return FourMomentum{{gamma, gamma * plan.state.beta.value(), 0.0, 0.0}};
}

}  // namespace relspeed
