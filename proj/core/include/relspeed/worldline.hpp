#pragma once

#include <span>
#include <string>
#include <vector>

#include "relspeed/accel.hpp"

namespace relspeed {

struct TraceSample {
  double tau;   // traveller clock
  double t;     // lab clock
  double x;     // lab-frame position
  double beta;  // signed velocity
};

struct WorldlineTrace {
  std::vector<TraceSample> samples;  // tau strictly increasing from 0
  double step = 0.0;
  std::string path_label;
};

// Worst-case deviations of an integrated worldline from its closed forms.
struct ErrorReport {
  double max_rel_error_t = 0.0;
  double max_rel_error_x = 0.0;
  double max_rel_error_beta = 0.0;
  double max_rel_error_gamma = 0.0;
  double terminal_beta = 0.0;
  double terminal_x = 0.0;
};

// Fixed-step 4th-order integration of dt/dtau = cosh(phi), dx/dtau =
// sinh(phi), where the rapidity phi is linear in tau across each segment.
// The state actually integrated is (t - tau, x), so coasting and rest
// segments accumulate exactly zero error, and since the right-hand side
// depends on tau alone the Runge-Kutta stages collapse to Simpson's rule.
// Throws config_error for step <= 0 or more than 1e8 total steps.
WorldlineTrace integrate_worldline(std::span<const WorldlineSegment> segments,
                                   double initial_rapidity, double step,
                                   std::string path_label = {});

// Ceiling on total integration steps before config_error.
inline constexpr std::size_t max_integration_steps = 100'000'000;

struct Path1Result {
  WorldlineTrace trace;
  ErrorReport report;   // terminal clocks vs the cruise closed forms
  double turnaround_x;  // integrated position at the velocity reversal
};

// Out-and-back cruise for a workload: rapidity jumps 0 -> phi at departure,
// phi -> -phi at midpoint, -phi -> 0 at arrival, coasting in between.
// step <= 0 picks proper_time / 20000.
Path1Result simulate_path1(const ComputationSpec& spec, double step = 0.0);

struct Path2Result {
  WorldlineTrace trace;
  ErrorReport report;  // vs the leg-composed closed forms
  double max_distance;  // integrated far-point distance
  double max_beta;      // integrated peak speed
  double coordinate_time;  // integrated total lab time
  double max_distance_composed;     // closed form, legs i+ii
  double max_distance_single_burn;  // one uninterrupted T/2 burn
  double single_burn_rel_deviation;  // |integrated - single_burn| / single_burn
};

// Integrates the four-leg itinerary at magnitude g over proper time T.
// step <= 0 picks proper_time / 100000.
Path2Result simulate_path2(double g, double proper_time, double step = 0.0);

// Integrates single constant-acceleration stretches over a grid of rapidity
// targets (tau_grid holds a*tau values, step is in the same scaled unit) and
// returns the worst deviation from the hyperbolic closed forms.
ErrorReport verify_closed_forms(std::span<const double> accel_grid,
                                std::span<const double> tau_grid, double step);

}  // namespace relspeed
