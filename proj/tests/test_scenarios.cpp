#include "relspeed/scenarios.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include <doctest.h>

#include "close.hpp"

using namespace relspeed;

TEST_CASE("race winners flip at quadratic order") {
  const RaceReport cubic = race_grover(1000000, 3.0);
  CHECK(cubic.winner == RaceWinner::relativistic_classical);
  CHECK(rel_close(cubic.classical_proper_runtime, 100.0, 1e-12));
  CHECK(cubic.quantum_runtime == 1000.0);
  CHECK(rel_close(cubic.classical_energy, 10000.0, 1e-12));
  CHECK(cubic.grover_equivalent_energy == 1000.0);
  CHECK(cubic.leg_proper_time == 0.5 * cubic.classical_proper_runtime);
  CHECK(cubic.leg_energy == 0.5 * cubic.classical_energy);

  CHECK(race_grover(1000000, 1.9).winner == RaceWinner::quantum);
  CHECK(race_grover(1000000, 2.1).winner ==
        RaceWinner::relativistic_classical);
}

TEST_CASE("race ties exactly on perfect squares at quadratic order") {
  const RaceReport square = race_grover(1000000, 2.0);
  CHECK(square.winner == RaceWinner::tie);
  CHECK(square.classical_proper_runtime == 1000.0);  // exact square root
  CHECK(square.quantum_runtime == 1000.0);
  // Off a perfect square the ceiling hands the classical side the edge.
  const RaceReport ten = race_grover(10, 2.0);
  CHECK(ten.winner == RaceWinner::relativistic_classical);
  CHECK(ten.quantum_runtime == 4.0);
  // A single query is a trivial tie at any order.
  CHECK(race_grover(1, 1.0).winner == RaceWinner::tie);
}

TEST_CASE("higher order compresses runtime and burns energy") {
  double prev_runtime = 1e300;
  double prev_energy = 0.0;
  for (const double order : {1.0, 1.5, 2.0, 3.0, 5.0}) {
    CAPTURE(order);
    const RaceReport r = race_grover(1000000, order);
    CHECK(r.classical_proper_runtime < prev_runtime);
    CHECK(r.classical_energy > prev_energy);
    prev_runtime = r.classical_proper_runtime;
    prev_energy = r.classical_energy;
  }
}

TEST_CASE("race rejects bad workloads") {
  CHECK_THROWS_AS(race_grover(0, 1.0), domain_error);
  CHECK_THROWS_AS(race_grover(-3, 2.0), domain_error);
  CHECK_THROWS_AS(race_grover(10, 0.5), domain_error);
  CHECK_THROWS_AS(race_grover(10, std::nan("")), domain_error);
}

TEST_CASE("proton catalogue scan figures") {
  const LhcScenario s = lhc_scenario();
  CHECK(s.circumference_m == 26659.0);
  CHECK(s.books == 32332832);
  CHECK(s.laps == 4386);
  // Frozen from 50-digit evaluation at this beta.
  CHECK(rel_close(s.gamma, 7453.5599552246350, 1e-12));
  CHECK(rel_close(s.lab_time_per_lap_s, 8.8924852939199028e-5, 1e-12));
  CHECK(rel_close(s.proper_time_per_lap_s, 1.1930520915293156e-8, 1e-12));
  CHECK(rel_close(s.proper_centripetal_accel, 1.1768060979913393e21, 1e-12));
  // The two clocks read back the dilation factor.
  CHECK(rel_close(s.lab_time_per_lap_s / s.proper_time_per_lap_s, s.gamma,
                  1e-13));
  // One book per lap implies a far lower order than the quoted figure.
  CHECK(rel_close(s.computed_order, 2.0619171449201590, 1e-13));
  CHECK(s.quoted_order == 2.99);
  CHECK_FALSE(s.order_reproduced);
  CHECK(std::abs(s.computed_order - s.quoted_order) > 0.9);
}

TEST_CASE("sweep covers the workload grid row-major") {
  const std::vector<std::int64_t> queries{100, 1000000};
  const std::vector<double> orders{1.0, 2.0, 3.0};
  const std::vector<SweepRow> rows = sweep_table(queries, orders);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].queries == 100);
  CHECK(rows[0].order == 1.0);
  CHECK(rows[1].order == 2.0);
  CHECK(rows[3].queries == 1000000);

  // Order 1 coasts: no acceleration to solve, no dilation.
  CHECK_FALSE(rows[0].accel.has_value());
  CHECK(rows[0].beta == 0.0);
  CHECK(rows[0].energy_ratio == 1.0);
  CHECK(rows[0].proper_time == 100.0);
  CHECK(rows[0].error.empty());

  // The quadratic cell matches the direct plan and solve.
  CHECK(rows[1].proper_time == 10.0);
  CHECK(rel_close(rows[1].energy_ratio, 10.0, 1e-12));
  REQUIRE(rows[1].accel.has_value());
  CHECK(rel_close(*rows[1].accel, 0.44999139970272884, 1e-10));
  CHECK(rows[1].error.empty());

  CHECK(rel_close(rows[4].energy_ratio, 1000.0, 1e-12));
  CHECK(rows[4].beta < 1.0);
  CHECK(rows[4].distance < 1000000.0);
}

TEST_CASE("sweep keeps planning past a failed cell") {
  const std::vector<std::int64_t> queries{1};
  const std::vector<double> orders{1.0, 2.0};
  const std::vector<SweepRow> rows = sweep_table(queries, orders);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].error.empty());  // order 1 on one query is fine
  CHECK_FALSE(rows[1].error.empty());  // a unit budget cannot be compressed
  CHECK(rows[1].proper_time == 0.0);
  CHECK_FALSE(rows[1].accel.has_value());
}

TEST_CASE("sweep output is deterministic") {
  const std::vector<std::int64_t> queries{10, 10000};
  const std::vector<double> orders{1.5, 2.5};
  const std::vector<SweepRow> a = sweep_table(queries, orders);
  const std::vector<SweepRow> b = sweep_table(queries, orders);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CAPTURE(i);
    CHECK(a[i].proper_time == b[i].proper_time);
    CHECK(a[i].beta == b[i].beta);
    CHECK(a[i].energy_ratio == b[i].energy_ratio);
    CHECK(a[i].distance == b[i].distance);
    CHECK(a[i].accel == b[i].accel);
    CHECK(a[i].error == b[i].error);
  }
}
