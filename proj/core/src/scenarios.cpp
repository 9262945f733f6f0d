#include "relspeed/scenarios.hpp"

#include <cmath>
#include <numbers>

#include "relspeed/units.hpp"
#include "stable.hpp"

namespace relspeed {

RaceReport race_grover(std::int64_t queries, double order) {
  if (queries < 1) throw domain_error("queries must be >= 1");
  if (!(order >= 1.0) || !std::isfinite(order))
    throw domain_error("order must be >= 1");
  const double n = static_cast<double>(queries);
  RaceReport report;
  report.queries = queries;
  report.order = order;
  report.classical_proper_runtime = detail::power(n, 1.0 / order);
  report.quantum_runtime = std::ceil(std::sqrt(n));
  report.classical_energy = detail::power(n, 1.0 - 1.0 / order);
  report.grover_equivalent_energy = std::sqrt(n);
  report.leg_proper_time = 0.5 * report.classical_proper_runtime;
  report.leg_energy = 0.5 * report.classical_energy;
  report.winner =
      report.classical_proper_runtime < report.quantum_runtime
          ? RaceWinner::relativistic_classical
          : (report.classical_proper_runtime > report.quantum_runtime
                 ? RaceWinner::quantum
                 : RaceWinner::tie);
  return report;
}

LhcScenario lhc_scenario() {
  LhcScenario s;
  s.circumference_m = 26659.0;
  s.beta = Beta::from_value(0.999999991);
  s.books = 32332832;
  s.laps = 4386;
  s.gamma = gamma_of_beta(s.beta);
  const double v = s.beta.value() * units::speed_of_light;
  s.lab_time_per_lap_s = s.circumference_m / v;
  s.proper_time_per_lap_s = s.lab_time_per_lap_s / s.gamma;
  const double radius = s.circumference_m / (2.0 * std::numbers::pi);
  s.proper_centripetal_accel = s.gamma * s.gamma * v * v / radius;
  // One book per lap couples the budgets as laps^n = books, i.e. the
  // implied dilation factor is books/laps, not the velocity gamma; the
  // velocity gamma is reported separately above.
  s.computed_order = std::log(static_cast<double>(s.books)) /
                     std::log(static_cast<double>(s.laps));
  s.quoted_order = 2.99;
  s.order_reproduced = std::abs(s.computed_order - s.quoted_order) <= 0.01;
  return s;
}

std::vector<SweepRow> sweep_table(std::span<const std::int64_t> queries,
                                  std::span<const double> orders) {
  std::vector<SweepRow> rows;
  rows.reserve(queries.size() * orders.size());
  for (std::int64_t n_queries : queries) {
    for (double order : orders) {
      SweepRow row;
      row.queries = n_queries;
      row.order = order;
      try {
        const ComputationSpec spec{n_queries, 1.0, order};
        const InertialPlan plan = plan_inertial(spec);
        row.proper_time = plan.proper_time;
        row.beta = plan.state.beta.value();
        row.energy_ratio = plan.energy_ratio;
        row.distance = plan.distance;
        if (order > 1.0) row.accel = solve_acceleration(spec);
      } catch (const domain_error& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace relspeed
