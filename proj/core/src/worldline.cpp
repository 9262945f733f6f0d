#include "relspeed/worldline.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "stable.hpp"

namespace relspeed {

namespace {

// |value - reference| relative to the reference, absolute when it is zero.
double rel_dev(double value, double reference) {
  const double diff = std::abs(value - reference);
  return reference != 0.0 ? diff / std::abs(reference) : diff;
}

struct Rates {
  double dy;  // d(t - tau)/dtau = cosh(phi) - 1
  double dx;  // dx/dtau = sinh(phi)
};

Rates rates_at(double phi) {
  return {detail::cosh_minus_one(phi), std::sinh(phi)};
}

}  // namespace

WorldlineTrace integrate_worldline(std::span<const WorldlineSegment> segments,
                                   double initial_rapidity, double step,
                                   std::string path_label) {
  if (!(step > 0.0) || !std::isfinite(step))
    throw config_error("integration step must be positive");
  if (!std::isfinite(initial_rapidity))
    throw config_error("initial rapidity must be finite");
  std::size_t total_steps = 0;
  for (const auto& seg : segments) {
    if (!(seg.duration >= 0.0) || !std::isfinite(seg.duration) ||
        !std::isfinite(seg.accel))
      throw config_error("segment durations must be finite and >= 0");
    total_steps += static_cast<std::size_t>(std::ceil(seg.duration / step));
    if (total_steps > max_integration_steps)
      throw config_error("step budget exceeded: over 1e8 integration steps");
  }

  WorldlineTrace trace;
  trace.step = step;
  trace.path_label = std::move(path_label);
  trace.samples.reserve(total_steps + 1);

  double phi = initial_rapidity;  // rapidity at the current segment start
  double base_tau = 0.0;
  double y = 0.0;  // t - tau: keeping the excess makes coasting exact
  double x = 0.0;
  trace.samples.push_back({0.0, 0.0, 0.0, std::tanh(phi)});

  for (const auto& seg : segments) {
    if (seg.duration > 0.0) {
      const auto n = static_cast<std::size_t>(std::ceil(seg.duration / step));
      const double h = seg.duration / static_cast<double>(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double tau_a = static_cast<double>(i) * h;
        // The last stage lands on the exact segment end, so leg boundaries
        // (and the final rapidity sum) carry no step-rounding residue.
        const double tau_b =
            i + 1 == n ? seg.duration : static_cast<double>(i + 1) * h;
        // One classical 4th-order step. The right-hand side depends on tau
        // alone, so the two middle stages coincide and the update reduces to
        // Simpson's rule, which keeps the 4th-order error bound.
        const Rates k1 = rates_at(phi + seg.accel * tau_a);
        const Rates k2 = rates_at(phi + seg.accel * (tau_a + 0.5 * h));
        const Rates k3 = rates_at(phi + seg.accel * tau_b);
        y += h * ((k1.dy + 4.0 * k2.dy + k3.dy) / 6.0);
        x += h * ((k1.dx + 4.0 * k2.dx + k3.dx) / 6.0);
        const double tau = base_tau + tau_b;
        trace.samples.push_back(
            {tau, tau + y, x, std::tanh(phi + seg.accel * tau_b)});
      }
    }
    phi += seg.accel * seg.duration;
    base_tau += seg.duration;
  }
  return trace;
}

Path1Result simulate_path1(const ComputationSpec& spec, double step) {
  const InertialPlan plan = plan_inertial(spec);
  const double proper = plan.proper_time;
  if (step <= 0.0) step = proper / 20000.0;
  const double phi = plan.state.rapidity;
  const WorldlineSegment coast{0.0, 0.5 * proper};

  // Outbound and inbound halves coast at opposite rapidity; the inbound
  // trace is re-based onto the turnaround event.
  WorldlineTrace trace =
      integrate_worldline({&coast, 1}, phi, step, "out-and-back cruise");
  const TraceSample turn = trace.samples.back();
  const WorldlineTrace inbound =
      integrate_worldline({&coast, 1}, -phi, step, "out-and-back cruise");
  trace.samples.reserve(trace.samples.size() + inbound.samples.size() - 1);
  for (std::size_t i = 1; i < inbound.samples.size(); ++i) {
    const TraceSample& s = inbound.samples[i];
    trace.samples.push_back({turn.tau + s.tau, turn.t + s.t, turn.x + s.x,
                             s.beta});
  }

  Path1Result result;
  result.turnaround_x = turn.x;
  const TraceSample& end = trace.samples.back();
  ErrorReport report;
  report.terminal_beta = end.beta;
  report.terminal_x = end.x;
  report.max_rel_error_t = rel_dev(end.t, plan.coordinate_time);
  report.max_rel_error_x = rel_dev(turn.x, 0.5 * plan.distance);
  report.max_rel_error_beta =
      rel_dev(std::abs(turn.beta), plan.state.beta.value());
  report.max_rel_error_gamma = rel_dev(std::cosh(phi), plan.state.gamma);
  result.report = report;
  result.trace = std::move(trace);
  return result;
}

Path2Result simulate_path2(double g, double proper_time, double step) {
  const AccelPlan itinerary = path2_itinerary(g, proper_time);
  if (step <= 0.0) step = proper_time / 100000.0;
  WorldlineTrace trace =
      integrate_worldline(itinerary.legs, 0.0, step, "four-leg return");

  Path2Result result;
  double max_x = 0.0;
  double max_b = 0.0;
  for (const TraceSample& s : trace.samples) {
    max_x = std::max(max_x, s.x);
    max_b = std::max(max_b, std::abs(s.beta));
  }
  const TraceSample& end = trace.samples.back();
  result.max_distance = max_x;
  result.max_beta = max_b;
  result.coordinate_time = end.t;
  result.max_distance_composed = itinerary.max_distance;
  result.max_distance_single_burn = itinerary.max_distance_single_burn;
  result.single_burn_rel_deviation =
      rel_dev(max_x, itinerary.max_distance_single_burn);

  ErrorReport report;
  report.terminal_beta = end.beta;
  report.terminal_x = end.x;
  report.max_rel_error_t = rel_dev(end.t, itinerary.coordinate_time);
  report.max_rel_error_x = rel_dev(max_x, itinerary.max_distance);
  report.max_rel_error_beta = rel_dev(max_b, itinerary.max_beta.value());
  report.max_rel_error_gamma =
      rel_dev(1.0 / std::sqrt((1.0 - max_b) * (1.0 + max_b)),
              gamma_of_beta(itinerary.max_beta));
  result.report = report;
  result.trace = std::move(trace);
  return result;
}

ErrorReport verify_closed_forms(std::span<const double> accel_grid,
                                std::span<const double> tau_grid,
                                double step) {
  if (accel_grid.empty() || tau_grid.empty())
    throw config_error("verification grids must be non-empty");
  if (!(step > 0.0) || !std::isfinite(step))
    throw config_error("integration step must be positive");
  ErrorReport worst;
  for (double a : accel_grid) {
    if (!(a >= 0.0) || !std::isfinite(a))
      throw domain_error("acceleration grid must be >= 0");
    for (double u : tau_grid) {  // u is the target rapidity a * tau
      if (!(u >= 0.0) || !std::isfinite(u))
        throw domain_error("rapidity grid must be >= 0");
      if (a == 0.0) {
        // Rest segment: the integrator holds t = tau and x = 0 exactly.
        const WorldlineSegment seg{0.0, u > 0.0 ? u : 1.0};
        const WorldlineTrace tr = integrate_worldline({&seg, 1}, 0.0, step);
        const TraceSample& e = tr.samples.back();
        worst.max_rel_error_t =
            std::max(worst.max_rel_error_t, rel_dev(e.t, e.tau));
        worst.max_rel_error_x = std::max(worst.max_rel_error_x, std::abs(e.x));
        continue;
      }
      // The step is given in units of c/a, so every acceleration runs the
      // same step count per rapidity target while exercising its own
      // floating-point scale.
      const WorldlineSegment seg{a, u / a};
      const WorldlineTrace tr = integrate_worldline({&seg, 1}, 0.0, step / a);
      const TraceSample& e = tr.samples.back();
      const double phi = a * e.tau;  // rapidity actually reached
      worst.max_rel_error_t =
          std::max(worst.max_rel_error_t, rel_dev(e.t, std::sinh(phi) / a));
      worst.max_rel_error_x =
          std::max(worst.max_rel_error_x,
                   rel_dev(e.x, detail::cosh_minus_one(phi) / a));
      worst.max_rel_error_beta = std::max(worst.max_rel_error_beta,
                                          rel_dev(e.beta, std::tanh(phi)));
      const double gamma = std::hypot(1.0, a * e.t);  // sqrt(1 + sinh^2)
      worst.max_rel_error_gamma = std::max(worst.max_rel_error_gamma,
                                           rel_dev(gamma, std::cosh(phi)));
      worst.terminal_beta = e.beta;
      worst.terminal_x = e.x;
    }
  }
  return worst;
}

}  // namespace relspeed
