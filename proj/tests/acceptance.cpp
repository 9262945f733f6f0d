// End-to-end gate for the planner: twelve checks, one PASS/FAIL line each,
// nonzero exit if anything fails. Tolerances are pinned here on purpose;
// loosening them is a behaviour change, not a cleanup.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "relspeed/relspeed.hpp"

namespace {

using relspeed::Beta;
using relspeed::ComputationSpec;

struct Checker {
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }

  // Relative closeness with an exact-equality short circuit so identities
  // that land exactly (0 vs 0, 10 vs 10) never divide by zero.
  void close(const std::string& what, double got, double want, double tol) {
    if (got == want) return;
    const double scale = std::max(std::abs(got), std::abs(want));
    const double rel = std::abs(got - want) / scale;
    if (!(rel <= tol)) {
      std::ostringstream os;
      os.precision(17);
      os << what << ": got " << got << ", want " << want << " (rel " << rel
         << ", tol " << tol << ")";
      failures.push_back(os.str());
    }
  }
};

int g_failed = 0;

void criterion(int id, const char* name,
               const std::function<void(Checker&)>& body) {
  Checker c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("unexpected exception: ") + e.what());
  }
  std::printf("%s %02d %s\n", c.failures.empty() ? "PASS" : "FAIL", id, name);
  for (const std::string& f : c.failures) {
    ++g_failed;
    std::printf("        %s\n", f.c_str());
  }
  std::fflush(stdout);
}

const double kBudgets[] = {2.0, 10.0, 100.0};
const double kOrders[] = {1.0, 1.5, 2.0, 3.0, 5.0};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Runs the command with stdout redirected to a scratch file and hands back
// the bytes. std::system keeps this portable to strict language modes.
std::string capture(const std::string& cmd, const std::string& scratch,
                    int& status) {
  status = std::system((cmd + " > \"" + scratch + "\"").c_str());
  std::ifstream in(scratch, std::ios::binary);
  std::ostringstream body;
  body << in.rdbuf();
  std::remove(scratch.c_str());
  return body.str();
}

}  // namespace

int main() {
  criterion(1, "required speed dilates time by the budget power law",
            [](Checker& c) {
              const auto start = std::chrono::steady_clock::now();
              for (const double t : kBudgets) {
                for (const double n : kOrders) {
                  const Beta beta = relspeed::beta_required(t, n);
                  const std::string label = "T=" + std::to_string(t) +
                                            " n=" + std::to_string(n);
                  c.close(label, relspeed::gamma_of_beta(beta),
                          std::pow(t, n - 1.0), 1e-12);
                }
              }
              c.require(seconds_since(start) < 1.0, "grid took over 1 s");
            });

  criterion(2, "cruise energy ratio equals the proper-time compression",
            [](Checker& c) {
              const auto start = std::chrono::steady_clock::now();
              const relspeed::InertialPlan hundred =
                  relspeed::plan_inertial({100, 1.0, 2.0});
              c.close("energy ratio at 100 queries", hundred.energy_ratio,
                      10.0, 1e-12);
              const relspeed::InertialPlan million =
                  relspeed::plan_inertial({1000000, 1.0, 2.0});
              c.close("energy ratio at 1e6 queries", million.energy_ratio,
                      1000.0, 1e-12);
              c.require(seconds_since(start) < 1.0, "planning took over 1 s");
            });

  criterion(3, "speedup order is recovered from the cruise distance",
            [](Checker& c) {
              for (const double t : kBudgets) {
                for (const double n : kOrders) {
                  const relspeed::InertialPlan plan =
                      relspeed::plan_inertial({1, std::pow(t, n), n});
                  const double back =
                      relspeed::order_from_distance(plan.distance, t);
                  c.close("T=" + std::to_string(t) + " n=" + std::to_string(n),
                          back, n, 1e-9);
                }
              }
            });

  criterion(4, "bondi factor identities hold across the grid",
            [](Checker& c) {
              for (const double t : kBudgets) {
                for (const double n : kOrders) {
                  const relspeed::KinematicState state =
                      relspeed::kinematic_state(relspeed::beta_required(t, n));
                  const std::string label = "T=" + std::to_string(t) +
                                            " n=" + std::to_string(n);
                  const double gamma = std::pow(t, n - 1.0);
                  c.close(label + " k + 1/k", state.k + 1.0 / state.k,
                          2.0 * gamma, 1e-12);
                  c.close(label + " k - 1/k", state.k - 1.0 / state.k,
                          2.0 * std::sqrt(std::pow(t, 2.0 * n - 2.0) - 1.0),
                          1e-12);
                }
              }
            });

  criterion(5, "integrated worldlines match the closed forms",
            [](Checker& c) {
              const auto start = std::chrono::steady_clock::now();
              const double accels[] = {0.1, 1.0, 10.0};
              const double rapidities[] = {0.5, 1.0, 1.5, 2.0, 2.5,
                                           3.0, 3.5, 4.0, 4.5, 5.0};
              const relspeed::ErrorReport report =
                  relspeed::verify_closed_forms(accels, rapidities, 1e-4);
              c.require(report.max_rel_error_t <= 1e-8,
                        "lab clock drifted past 1e-8");
              c.require(report.max_rel_error_x <= 1e-8,
                        "position drifted past 1e-8");
              c.require(report.max_rel_error_beta <= 1e-8,
                        "velocity drifted past 1e-8");
              c.require(report.max_rel_error_gamma <= 1e-8,
                        "dilation drifted past 1e-8");
              c.require(seconds_since(start) < 30.0, "sweep took over 30 s");
            });

  criterion(6, "acceleration solve agrees with independent bisection",
            [](Checker& c) {
              const ComputationSpec spec{100, 1.0, 2.0};
              const double solved = relspeed::solve_acceleration(spec);
              const double residual =
                  std::asinh(solved * spec.coordinate_budget()) / solved -
                  spec.proper_budget();
              c.require(
                  std::abs(residual) / spec.proper_budget() <= 1e-11,
                  "forward-map residual above 1e-11 relative");

              double lo = 1e-6, hi = 1e3;  // plain bisection, same residual
              const auto f = [&](double a) {
                return std::asinh(a * spec.coordinate_budget()) / a -
                       spec.proper_budget();
              };
              c.require(f(lo) > 0.0 && f(hi) < 0.0,
                        "bisection bracket lost the root");
              for (int i = 0; i < 200; ++i) {
                const double mid = 0.5 * (lo + hi);
                (f(mid) > 0.0 ? lo : hi) = mid;
              }
              const double oracle = 0.5 * (lo + hi);
              c.close("solved vs bisection", solved, oracle, 1e-5);
              c.require(std::abs(solved - 0.449987) <= 1e-5,
                        "root moved away from 0.449987");
            });

  criterion(7, "four-leg itinerary closes and flags the single-burn figure",
            [](Checker& c) {
              const relspeed::Path2Result res =
                  relspeed::simulate_path2(1.0, 4.0, 4e-5);
              c.require(std::abs(res.report.terminal_beta) <= 1e-9,
                        "craft not at rest at the end");
              c.require(
                  std::abs(res.report.terminal_x) <= 1e-6 * res.max_distance,
                  "craft not back at the start");
              c.close("far point vs composed closed form", res.max_distance,
                      2.0 * (std::cosh(1.0) - 1.0), 1e-6);
              const double single = std::cosh(2.0) - 1.0;
              c.require(
                  std::abs(res.max_distance - single) / single > 1e-3,
                  "far point unexpectedly matches the single-burn figure");
              c.require(res.single_burn_rel_deviation > 0.5,
                        "discrepancy report missing or too small");
            });

  criterion(8, "burn fuel converges to twice the lab time",
            [](Checker& c) {
              const auto ratio = [](double n) {
                const double tau = std::asinh(n);  // burn until a t = N
                return relspeed::fuel_single_leg(1.0, tau, 1.0).fuel_mass /
                       (2.0 * n);
              };
              const double at_million = ratio(1e6);
              c.require(at_million >= 0.9999 && at_million <= 1.0001,
                        "ratio at 1e6 left [0.9999, 1.0001]");
              double prev = ratio(1e3);
              for (const double n : {1e4, 1e5, 1e6}) {
                const double r = ratio(n);
                c.require(prev < r && r < 1.0,
                          "decade ratios not climbing toward 1");
                prev = r;
              }
            });

  criterion(9, "race verdict flips at quadratic order",
            [](Checker& c) {
              using relspeed::RaceWinner;
              for (const double n : {1.0, 1.5, 1.9}) {
                c.require(relspeed::race_grover(1000000, n).winner ==
                              RaceWinner::quantum,
                          "below order 2 the quantum side should win");
              }
              c.require(relspeed::race_grover(1000000, 2.0).winner ==
                            RaceWinner::tie,
                        "order 2 on a square workload should tie");
              for (const double n : {2.1, 3.0, 5.0}) {
                c.require(relspeed::race_grover(1000000, n).winner ==
                              RaceWinner::relativistic_classical,
                          "above order 2 the classical side should win");
              }
              const relspeed::RaceReport cubic =
                  relspeed::race_grover(1000000, 3.0);
              c.close("classical runtime at order 3",
                      cubic.classical_proper_runtime, 100.0, 1e-12);
              c.close("quantum runtime", cubic.quantum_runtime, 1000.0, 0.0);
              c.close("classical energy", cubic.classical_energy, 10000.0,
                      1e-12);
              c.close("quantum-equivalent energy",
                      cubic.grover_equivalent_energy, 1000.0, 0.0);
            });

  criterion(10, "storage ring reproduces dilation but not the quoted order",
            [](Checker& c) {
              const relspeed::LhcScenario s = relspeed::lhc_scenario();
              c.close("lorentz factor", s.gamma, 7453.5599417698089, 1e-3);
              c.close("lab seconds per lap", s.lab_time_per_lap_s, 8.89246e-5,
                      1e-4);
              c.require(!s.order_reproduced,
                        "quoted order unexpectedly reproduced");
              c.require(std::abs(s.computed_order - 2.0619) <= 1e-3,
                        "computed order strayed from 2.0619");
            });

  criterion(11, "out-and-back cruise lands on both clocks",
            [](Checker& c) {
              const relspeed::Path1Result res =
                  relspeed::simulate_path1({100, 1.0, 2.0});
              const relspeed::TraceSample& end = res.trace.samples.back();
              c.close("terminal traveller clock", end.tau, 10.0, 1e-9);
              c.close("terminal lab clock", end.t, 100.0, 1e-9);
            });

  criterion(12, "command line output is byte-identical across runs",
            [](Checker& c) {
              const std::string cmd =
                  std::string("\"") + RELSPEED_CLI_EXE +
                  "\" plan-inertial --queries 100 --order 2 --format json";
              int status_a = 0, status_b = 0;
              const std::string a = capture(cmd, "determinism_a.json", status_a);
              const std::string b = capture(cmd, "determinism_b.json", status_b);
              c.require(status_a == 0 && status_b == 0,
                        "planner exited nonzero");
              c.require(!a.empty(), "planner produced no output");
              c.require(a == b, "runs differed byte for byte");
            });

  if (g_failed != 0) {
    std::printf("%d check(s) failed\n", g_failed);
    return 1;
  }
  return 0;
}
