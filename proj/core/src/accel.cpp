#include "relspeed/accel.hpp"

#include <cmath>

#include "relspeed/detail/root.hpp"
#include "relspeed/units.hpp"
#include "stable.hpp"

namespace relspeed {

namespace {

void require_accel(double a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw domain_error("proper acceleration must be positive");
}

void require_tau(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau))
    throw domain_error("proper time must be >= 0");
}

}  // namespace

HyperbolicPoint worldline_point(double accel, double tau) {
  require_accel(accel);
  require_tau(tau);
  const double u = accel * tau;
  return {std::sinh(u) / accel, detail::cosh_minus_one(u) / accel};
}

Beta velocity_at(double accel, double tau) {
  require_accel(accel);
  require_tau(tau);
  // 1 - tanh(u) = 2 e^(-2u) / (1 + e^(-2u)): the gap survives u ~ 300 where
  // tanh itself has long since rounded to 1.
  const double w = std::exp(-2.0 * accel * tau);
  return Beta::from_gap(2.0 * w / (1.0 + w));
}

double gamma_at(double accel, double tau) {
  require_accel(accel);
  require_tau(tau);
  return std::cosh(accel * tau);
}

ClockSet clocks_from_proper(double accel, double tau) {
  require_accel(accel);
  require_tau(tau);
  const double u = accel * tau;
  return {tau, std::sinh(u) / accel, detail::cosh_minus_one(u) / accel};
}

ClockSet clocks_from_coordinate(double accel, double t) {
  require_accel(accel);
  if (!(t >= 0.0) || !std::isfinite(t))
    throw domain_error("coordinate time must be >= 0");
  const double s = accel * t;  // sinh(a tau)
  return {std::asinh(s) / accel, t, detail::sqrt1pss_minus_one(s) / accel};
}

ClockSet clocks_from_distance(double accel, double distance) {
  require_accel(accel);
  if (!(distance >= 0.0) || !std::isfinite(distance))
    throw domain_error("distance must be >= 0");
  // cosh(a tau) = a d + 1, but acosh(1 + small) throws away half the digits;
  // sinh = sqrt(a d (a d + 2)) reads the same point off the hyperbola with
  // no cancellation, and asinh recovers tau.
  const double s = std::sqrt(accel * distance * (accel * distance + 2.0));
  return {std::asinh(s) / accel, s / accel, distance};
}

double solve_acceleration(const ComputationSpec& spec) {
  spec.validate();
  if (spec.order == 1.0) return 0.0;
  if (spec.queries < 2)
    throw domain_error("order > 1 needs at least 2 queries");
  const double coordinate = spec.coordinate_budget();
  const double proper = spec.proper_budget();
  // asinh(a K)/a falls strictly from K (a -> 0) to 0, so it crosses the
  // proper budget K^(1/n) < K exactly once. Seed at 1/K, where a K = 1.
  const auto residual = [&](double a) {
    return std::asinh(a * coordinate) / a - proper;
  };
  return detail::solve_decreasing(residual, 1.0 / coordinate);
}

AccelPlan path2_itinerary(double g, double proper_time) {
  require_accel(g);
  if (!(proper_time > 0.0) || !std::isfinite(proper_time))
    throw domain_error("proper time must be positive");
  const double leg = 0.25 * proper_time;
  const double phi = g * leg;  // rapidity at the end of leg i
  AccelPlan plan;
  plan.accel = g;
  // Thrust flips against the motion for the second half, so on the axis the
  // legs read +g, -g, -g, +g: speed up, brake to rest at the far point,
  // speed up homeward, brake to rest at the start.
  plan.legs = {WorldlineSegment{g, leg}, WorldlineSegment{-g, leg},
               WorldlineSegment{-g, leg}, WorldlineSegment{g, leg}};
  plan.proper_time = proper_time;
  plan.coordinate_time = 4.0 * std::sinh(phi) / g;
  plan.max_beta = velocity_at(g, leg);
  plan.max_distance = 2.0 * detail::cosh_minus_one(phi) / g;
  plan.max_distance_single_burn = detail::cosh_minus_one(2.0 * phi) / g;
  plan.fuel_single_leg = std::expm1(phi);
  plan.fuel_full_path = std::expm1(4.0 * phi);
  return plan;
}

AccelPlan plan_accel(const ComputationSpec& spec) {
  spec.validate();
  const double proper = spec.proper_budget();
  if (spec.order == 1.0) {
    // No thrust: four coasting quarters at rest relative to the lab.
    AccelPlan plan;
    plan.spec = spec;
    const double leg = 0.25 * proper;
    plan.legs = {WorldlineSegment{0.0, leg}, WorldlineSegment{0.0, leg},
                 WorldlineSegment{0.0, leg}, WorldlineSegment{0.0, leg}};
    plan.proper_time = proper;
    plan.coordinate_time = proper;
    return plan;
  }
  AccelPlan plan = path2_itinerary(solve_acceleration(spec), proper);
  plan.spec = spec;
  return plan;
}

FuelAccount fuel_single_leg(double accel, double tau, double rest_mass) {
  require_accel(accel);
  require_tau(tau);
  if (!(rest_mass > 0.0) || !std::isfinite(rest_mass))
    throw domain_error("rest mass must be positive");
  const double u = accel * tau;  // rapidity gained over the burn
  const double s = std::sinh(u);  // a t / c at burn end
  FuelAccount account;
  account.payload = rest_mass;
  // M/m0 = e^u - 1 = a t + sqrt(1 + (a t)^2) - 1, assembled from the t-form
  // so the small-burn limit M -> m0 a tau keeps all its digits.
  account.fuel_mass = rest_mass * (s + detail::sqrt1pss_minus_one(s));
  // The radiated light carries E = m0 c^2 sinh(u), which balances the
  // energy and momentum books simultaneously.
  account.radiated_energy = rest_mass * s;
  const double ad = detail::cosh_minus_one(u);  // a d / c^2
  if (ad >= 1.0)
    account.distance_form_mass =
        rest_mass * (ad + std::sqrt(ad * ad - 1.0) - 1.0);
  return account;
}

double fuel_full_path(double g, double proper_time, double rest_mass) {
  require_accel(g);
  require_tau(proper_time);
  if (!(rest_mass > 0.0) || !std::isfinite(rest_mass))
    throw domain_error("rest mass must be positive");
  // Each of the four burns multiplies the in-flight mass by e^(g T / 4)
  // whatever its direction, so the stack compounds to m0 e^(g T).
  return rest_mass * std::expm1(g * proper_time);
}

double gravitational_rate(double g_si, double height_m) {
  if (!(g_si >= 0.0) || !std::isfinite(g_si))
    throw domain_error("gravitational acceleration must be >= 0");
  if (!(height_m >= 0.0) || !std::isfinite(height_m))
    throw domain_error("height must be >= 0");
  const double potential = g_si * height_m / units::speed_of_light_sq;
  if (!(potential < 0.01))
    throw validity_error(
        "g h / c^2 >= 0.01: outside the first-order validity window");
  return 1.0 - potential;
}

}  // namespace relspeed
