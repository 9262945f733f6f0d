#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relspeed/accel.hpp"

namespace relspeed {

enum class RaceWinner { relativistic_classical, quantum, tie };

// Time-dilated brute force against an ideal sqrt(N) search over the same
// oracle. Runtimes are in multiples of the query time; the classical side
// finishes N queries in proper time N^(1/n) at energy cost gamma = N^(1-1/n)
// per unit rest mass, the quantum side needs ceil(sqrt(N)) queries.
struct RaceReport {
  std::int64_t queries = 1;
  double order = 1.0;
  double classical_proper_runtime = 0.0;  // N^(1/n)
  double quantum_runtime = 0.0;           // ceil(sqrt(N))
  double classical_energy = 0.0;          // N^(1 - 1/n), units of m0 c^2
  double grover_equivalent_energy = 0.0;  // sqrt(N), same units
  double leg_proper_time = 0.0;           // out-and-back: half the runtime
  double leg_energy = 0.0;                // half the energy
  RaceWinner winner = RaceWinner::tie;
};

RaceReport race_grover(std::int64_t queries, double order);

// Storage-ring benchmark: a catalogue scan riding an LHC proton
// (beta = 0.999999991 around a 26659 m ring), one book per lap.
struct LhcScenario {
  double circumference_m = 0.0;
  Beta beta = Beta::from_value(0.0);
  std::int64_t books = 0;
  std::int64_t laps = 0;
  double gamma = 0.0;
  double lab_time_per_lap_s = 0.0;
  double proper_time_per_lap_s = 0.0;
  double proper_centripetal_accel = 0.0;  // m/s^2, gamma^2 v^2 / r
  double computed_order = 0.0;  // log(books) / log(laps)
  double quoted_order = 0.0;    // figure often attached to this setup
  bool order_reproduced = false;  // |computed - quoted| <= 0.01
};

LhcScenario lhc_scenario();

// One cell of a workload sweep. error is non-empty when planning that cell
// failed, in which case the numeric fields (beyond the inputs) are zero.
struct SweepRow {
  std::int64_t queries = 1;
  double order = 1.0;
  double proper_time = 0.0;
  double beta = 0.0;
  double energy_ratio = 0.0;
  double distance = 0.0;
  std::optional<double> accel;  // absent for order 1
  std::string error;
};

// Cruise plans plus solved accelerations over the cross product of queries
// and orders, row-major in that order. Cells that fail to plan carry the
// error text instead of aborting the sweep.
std::vector<SweepRow> sweep_table(std::span<const std::int64_t> queries,
                                  std::span<const double> orders);

}  // namespace relspeed
