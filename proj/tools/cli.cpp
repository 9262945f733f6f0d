#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relspeed/relspeed.hpp"
#include "textio.hpp"

namespace relspeed::cli {
namespace {

constexpr const char* kCommands[] = {"plan-inertial", "plan-accel", "simulate",
                                     "race", "scenario", "sweep"};

// Flag-level problems discovered outside CLI11 (config files, unit combos).
struct UsageError {
  std::string message;
};

struct Options {
  std::int64_t queries = 1;
  double order = 1.0;
  double query_time_s = 1.0;
  double rest_mass_kg = 1.0;
  std::string units = "natural";
  double step = 0.0;
  int path = 1;
  std::string queries_list = "10,100,1000,10000,100000,1000000";
  std::string orders_list = "1,1.5,2,2.5,3";
  std::string format = "json";
  std::string output_path;
  std::string config_path;

  bool si() const { return units == "si"; }
};

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

// Flat key = value lines; '#' starts a comment, blank lines are skipped.
std::vector<std::pair<std::string, std::string>> load_config(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot read config file: " + path};
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line.substr(0, line.find('#')));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw UsageError{"config line " + std::to_string(lineno) +
                       ": expected key = value"};
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty())
      throw UsageError{"config line " + std::to_string(lineno) +
                       ": expected key = value"};
    if (key == "config") throw UsageError{"config files cannot set config"};
    entries.emplace_back(key, value);
  }
  return entries;
}

struct Prescan {
  std::string sub;
  int sub_index = 0;
  std::string config_path;
};

// First pass over argv: which command, and is there a config file to fold in.
Prescan prescan(int argc, const char* const* argv) {
  Prescan p;
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (p.sub.empty()) {
      for (const char* name : kCommands) {
        if (arg == name) {
          p.sub = name;
          p.sub_index = i;
          break;
        }
      }
    }
    if (arg == "--config" && i + 1 < argc) {
      p.config_path = argv[i + 1];
    } else if (arg.rfind("--config=", 0) == 0) {
      p.config_path = std::string(arg.substr(9));
    }
  }
  return p;
}

std::vector<std::int64_t> parse_int_list(const std::string& text,
                                         const std::string& flag) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = trim(text.substr(pos, comma - pos));
    char* end = nullptr;
    const long long v = std::strtoll(item.c_str(), &end, 10);
    if (item.empty() || end != item.c_str() + item.size())
      throw UsageError{flag + ": expected a comma-separated integer list"};
    values.push_back(v);
    pos = comma + 1;
  }
  return values;
}

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& flag) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = trim(text.substr(pos, comma - pos));
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size())
      throw UsageError{flag + ": expected a comma-separated number list"};
    values.push_back(v);
    pos = comma + 1;
  }
  return values;
}

void check_units(const Options& o) {
  if (!o.si() && o.query_time_s != 1.0)
    throw domain_error("natural units fix the query time at 1");
}

ComputationSpec make_spec(const Options& o) {
  check_units(o);
  return ComputationSpec{o.queries, o.query_time_s, o.order};
}

void echo_inputs(JsonWriter& w, const Options& o, bool with_query_time = true) {
  w.key("queries").value(o.queries);
  w.key("order").value(o.order);
  if (with_query_time) w.key("query-time-s").value(o.query_time_s);
  w.key("units").value(o.units);
  if (o.si()) w.key("rest-mass-kg").value(o.rest_mass_kg);
}

void echo_csv_inputs(std::vector<std::string>& header,
                     std::vector<std::string>& row, const Options& o,
                     bool with_query_time = true) {
  header.emplace_back("queries");
  row.push_back(std::to_string(o.queries));
  header.emplace_back("order");
  row.push_back(fmt_double(o.order));
  if (with_query_time) {
    header.emplace_back("query_time_s");
    row.push_back(fmt_double(o.query_time_s));
  }
  header.emplace_back("units");
  row.push_back(o.units);
  if (o.si()) {
    header.emplace_back("rest_mass_kg");
    row.push_back(fmt_double(o.rest_mass_kg));
  }
}

// At most ~cap indices, evenly strided, always keeping the final sample.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t cap = 1001) {
  std::vector<std::size_t> idx;
  if (n == 0) return idx;
  const std::size_t stride = (n + cap - 1) / cap;
  for (std::size_t i = 0; i < n; i += stride) idx.push_back(i);
  if (idx.back() != n - 1) idx.push_back(n - 1);
  return idx;
}

void emit_error_report(JsonWriter& w, const ErrorReport& r) {
  w.key("error_report").begin_object();
  w.key("max_rel_error_t").value(r.max_rel_error_t);
  w.key("max_rel_error_x").value(r.max_rel_error_x);
  w.key("max_rel_error_beta").value(r.max_rel_error_beta);
  w.key("max_rel_error_gamma").value(r.max_rel_error_gamma);
  w.key("terminal_beta").value(r.terminal_beta);
  w.key("terminal_x").value(r.terminal_x);
  w.end_object();
}

void emit_samples(JsonWriter& w, const WorldlineTrace& trace, bool si) {
  const double cx = si ? units::speed_of_light : 1.0;
  w.key("sample_columns").begin_array();
  w.value(si ? "tau_s" : "tau");
  w.value(si ? "t_s" : "t");
  w.value(si ? "x_m" : "x");
  w.value("beta");
  w.end_array();
  const auto idx = sample_indices(trace.samples.size());
  w.key("samples_total").value(static_cast<std::int64_t>(trace.samples.size()));
  w.key("samples_emitted").value(static_cast<std::int64_t>(idx.size()));
  w.key("samples").begin_array();
  for (const std::size_t i : idx) {
    const TraceSample& s = trace.samples[i];
    w.begin_array().value(s.tau).value(s.t).value(s.x * cx).value(s.beta);
    w.end_array();
  }
  w.end_array();
}

std::string trace_csv(const WorldlineTrace& trace, bool si) {
  const double cx = si ? units::speed_of_light : 1.0;
  std::string doc = csv_line({si ? "tau_s" : "tau", si ? "t_s" : "t",
                              si ? "x_m" : "x", "beta"});
  for (const std::size_t i : sample_indices(trace.samples.size())) {
    const TraceSample& s = trace.samples[i];
    doc += csv_line({fmt_double(s.tau), fmt_double(s.t), fmt_double(s.x * cx),
                     fmt_double(s.beta)});
  }
  return doc;
}

std::string do_plan_inertial(const Options& o) {
  const ComputationSpec spec = make_spec(o);
  const InertialPlan plan = plan_inertial(spec, o.si() ? o.rest_mass_kg : 1.0);
  const FourMomentum mom = four_momentum(plan);
  const double c = units::speed_of_light;

  if (o.format == "csv") {
    std::vector<std::string> header, row;
    echo_csv_inputs(header, row, o);
    const std::pair<const char*, double> fields[] = {
        {"proper_time", plan.proper_time},
        {"coordinate_time", plan.coordinate_time},
        {"beta", plan.state.beta.value()},
        {"one_minus_beta", plan.state.beta.gap()},
        {"gamma", plan.state.gamma},
        {"rapidity", plan.state.rapidity},
        {"bondi_k", plan.state.k},
        {"energy_ratio", plan.energy_ratio},
        {"distance", plan.distance},
        {"turnaround_distance", 0.5 * plan.distance},
        {"p0", mom.p[0]},
        {"p1", mom.p[1]},
        {"p2", mom.p[2]},
        {"p3", mom.p[3]},
    };
    for (const auto& [name, value] : fields) {
      header.emplace_back(name);
      row.push_back(fmt_double(value));
    }
    if (o.si()) {
      const std::pair<const char*, double> extras[] = {
          {"distance_m", plan.distance * c},
          {"turnaround_distance_m", 0.5 * plan.distance * c},
          {"energy_joules", plan.energy_ratio * plan.rest_mass * c * c},
          {"momentum_kg_m_s", mom.p[1] * plan.rest_mass * c},
      };
      for (const auto& [name, value] : extras) {
        header.emplace_back(name);
        row.push_back(fmt_double(value));
      }
    }
    return csv_line(header) + csv_line(row);
  }

  JsonWriter w;
  w.begin_object();
  w.key("command").value("plan-inertial");
  echo_inputs(w, o);
  w.key("proper_time").value(plan.proper_time);
  w.key("coordinate_time").value(plan.coordinate_time);
  w.key("beta").value(plan.state.beta.value());
  w.key("one_minus_beta").value(plan.state.beta.gap());
  w.key("gamma").value(plan.state.gamma);
  w.key("rapidity").value(plan.state.rapidity);
  w.key("bondi_k").value(plan.state.k);
  w.key("energy_ratio").value(plan.energy_ratio);
  w.key("distance").value(plan.distance);
  w.key("turnaround_distance").value(0.5 * plan.distance);
  w.key("four_momentum").begin_array();
  for (const double component : mom.p) w.value(component);
  w.end_array();
  if (o.si()) {
    w.key("distance_m").value(plan.distance * c);
    w.key("turnaround_distance_m").value(0.5 * plan.distance * c);
    w.key("energy_joules").value(plan.energy_ratio * plan.rest_mass * c * c);
    w.key("momentum_kg_m_s").value(mom.p[1] * plan.rest_mass * c);
  }
  w.end_object();
  return w.take();
}

std::string do_plan_accel(const Options& o) {
  const ComputationSpec spec = make_spec(o);
  const AccelPlan plan = plan_accel(spec);
  const double c = units::speed_of_light;

  if (o.format == "csv") {
    std::vector<std::string> header, row;
    echo_csv_inputs(header, row, o);
    const std::pair<const char*, double> fields[] = {
        {"proper_time", plan.proper_time},
        {"coordinate_time", plan.coordinate_time},
        {"accel", plan.accel},
        {"max_beta", plan.max_beta.value()},
        {"one_minus_max_beta", plan.max_beta.gap()},
        {"max_gamma", gamma_of_beta(plan.max_beta)},
        {"max_distance", plan.max_distance},
        {"max_distance_single_burn", plan.max_distance_single_burn},
        {"fuel_single_leg", plan.fuel_single_leg},
        {"fuel_full_path", plan.fuel_full_path},
    };
    for (const auto& [name, value] : fields) {
      header.emplace_back(name);
      row.push_back(fmt_double(value));
    }
    if (o.si()) {
      const std::pair<const char*, double> extras[] = {
          {"accel_m_per_s2", plan.accel * c},
          {"max_distance_m", plan.max_distance * c},
          {"max_distance_single_burn_m", plan.max_distance_single_burn * c},
          {"fuel_single_leg_kg", plan.fuel_single_leg * o.rest_mass_kg},
          {"fuel_full_path_kg", plan.fuel_full_path * o.rest_mass_kg},
      };
      for (const auto& [name, value] : extras) {
        header.emplace_back(name);
        row.push_back(fmt_double(value));
      }
    }
    return csv_line(header) + csv_line(row);
  }

  JsonWriter w;
  w.begin_object();
  w.key("command").value("plan-accel");
  echo_inputs(w, o);
  w.key("proper_time").value(plan.proper_time);
  w.key("coordinate_time").value(plan.coordinate_time);
  w.key("accel").value(plan.accel);
  w.key("max_beta").value(plan.max_beta.value());
  w.key("one_minus_max_beta").value(plan.max_beta.gap());
  w.key("max_gamma").value(gamma_of_beta(plan.max_beta));
  w.key("max_distance").value(plan.max_distance);
  w.key("max_distance_single_burn").value(plan.max_distance_single_burn);
  w.key("fuel_single_leg").value(plan.fuel_single_leg);
  w.key("fuel_full_path").value(plan.fuel_full_path);
  w.key("legs").begin_array();
  for (const WorldlineSegment& leg : plan.legs) {
    w.begin_object();
    w.key("accel").value(leg.accel);
    w.key("duration").value(leg.duration);
    w.end_object();
  }
  w.end_array();
  if (o.si()) {
    w.key("accel_m_per_s2").value(plan.accel * c);
    w.key("max_distance_m").value(plan.max_distance * c);
    w.key("max_distance_single_burn_m")
        .value(plan.max_distance_single_burn * c);
    w.key("fuel_single_leg_kg").value(plan.fuel_single_leg * o.rest_mass_kg);
    w.key("fuel_full_path_kg").value(plan.fuel_full_path * o.rest_mass_kg);
  }
  w.end_object();
  return w.take();
}

std::string do_simulate(const Options& o) {
  const ComputationSpec spec = make_spec(o);
  if (o.path == 2) {
    if (spec.order == 1.0)
      throw domain_error(
          "path 2 needs order > 1: an order-1 plan never fires its thrusters");
    const double g = solve_acceleration(spec);
    const Path2Result res = simulate_path2(g, spec.proper_budget(), o.step);
    if (o.format == "csv") return trace_csv(res.trace, o.si());
    JsonWriter w;
    w.begin_object();
    w.key("command").value("simulate");
    w.key("path").value(2);
    echo_inputs(w, o);
    w.key("step").value(res.trace.step);
    w.key("accel").value(g);
    w.key("proper_time").value(spec.proper_budget());
    w.key("coordinate_time_integrated").value(res.coordinate_time);
    w.key("max_beta_integrated").value(res.max_beta);
    w.key("max_distance_integrated").value(res.max_distance);
    w.key("max_distance_composed").value(res.max_distance_composed);
    w.key("max_distance_single_burn").value(res.max_distance_single_burn);
    w.key("single_burn_rel_deviation").value(res.single_burn_rel_deviation);
    emit_error_report(w, res.report);
    emit_samples(w, res.trace, o.si());
    w.end_object();
    return w.take();
  }
  const Path1Result res = simulate_path1(spec, o.step);
  const InertialPlan plan = plan_inertial(spec);
  if (o.format == "csv") return trace_csv(res.trace, o.si());
  JsonWriter w;
  w.begin_object();
  w.key("command").value("simulate");
  w.key("path").value(1);
  echo_inputs(w, o);
  w.key("step").value(res.trace.step);
  w.key("proper_time").value(plan.proper_time);
  w.key("coordinate_time").value(plan.coordinate_time);
  w.key("turnaround_distance").value(0.5 * plan.distance);
  w.key("turnaround_x_integrated").value(res.turnaround_x);
  emit_error_report(w, res.report);
  emit_samples(w, res.trace, o.si());
  w.end_object();
  return w.take();
}

const char* winner_name(RaceWinner w) {
  switch (w) {
    case RaceWinner::relativistic_classical: return "relativistic-classical";
    case RaceWinner::quantum: return "quantum";
    case RaceWinner::tie: return "tie";
  }
  return "tie";
}

std::string do_race(const Options& o) {
  const RaceReport rep = race_grover(o.queries, o.order);
  const double energy_to_j = o.rest_mass_kg * units::speed_of_light_sq;

  if (o.format == "csv") {
    std::vector<std::string> header, row;
    echo_csv_inputs(header, row, o, /*with_query_time=*/false);
    const std::pair<const char*, double> fields[] = {
        {"classical_proper_runtime", rep.classical_proper_runtime},
        {"quantum_runtime", rep.quantum_runtime},
        {"classical_energy", rep.classical_energy},
        {"grover_equivalent_energy", rep.grover_equivalent_energy},
        {"leg_proper_time", rep.leg_proper_time},
        {"leg_energy", rep.leg_energy},
    };
    for (const auto& [name, value] : fields) {
      header.emplace_back(name);
      row.push_back(fmt_double(value));
    }
    if (o.si()) {
      header.emplace_back("classical_energy_joules");
      row.push_back(fmt_double(rep.classical_energy * energy_to_j));
      header.emplace_back("grover_equivalent_energy_joules");
      row.push_back(fmt_double(rep.grover_equivalent_energy * energy_to_j));
    }
    header.emplace_back("winner");
    row.emplace_back(winner_name(rep.winner));
    return csv_line(header) + csv_line(row);
  }

  JsonWriter w;
  w.begin_object();
  w.key("command").value("race");
  echo_inputs(w, o, /*with_query_time=*/false);
  w.key("classical_proper_runtime").value(rep.classical_proper_runtime);
  w.key("quantum_runtime").value(rep.quantum_runtime);
  w.key("classical_energy").value(rep.classical_energy);
  w.key("grover_equivalent_energy").value(rep.grover_equivalent_energy);
  w.key("leg_proper_time").value(rep.leg_proper_time);
  w.key("leg_energy").value(rep.leg_energy);
  if (o.si()) {
    w.key("classical_energy_joules").value(rep.classical_energy * energy_to_j);
    w.key("grover_equivalent_energy_joules")
        .value(rep.grover_equivalent_energy * energy_to_j);
  }
  w.key("winner").value(winner_name(rep.winner));
  w.end_object();
  return w.take();
}

std::string do_scenario(const Options& o) {
  const LhcScenario s = lhc_scenario();

  if (o.format == "csv") {
    const std::vector<std::string> header = {
        "name",           "circumference_m",
        "beta",           "books",
        "laps",           "gamma",
        "lab_time_per_lap_s", "proper_time_per_lap_s",
        "proper_centripetal_accel_m_s2", "computed_order",
        "quoted_order",   "order_reproduced"};
    const std::vector<std::string> row = {
        "lhc-proton-library",
        fmt_double(s.circumference_m),
        fmt_double(s.beta.value()),
        std::to_string(s.books),
        std::to_string(s.laps),
        fmt_double(s.gamma),
        fmt_double(s.lab_time_per_lap_s),
        fmt_double(s.proper_time_per_lap_s),
        fmt_double(s.proper_centripetal_accel),
        fmt_double(s.computed_order),
        fmt_double(s.quoted_order),
        s.order_reproduced ? "true" : "false"};
    return csv_line(header) + csv_line(row);
  }

  JsonWriter w;
  w.begin_object();
  w.key("command").value("scenario");
  w.key("name").value("lhc-proton-library");
  w.key("circumference_m").value(s.circumference_m);
  w.key("beta").value(s.beta.value());
  w.key("books").value(s.books);
  w.key("laps").value(s.laps);
  w.key("gamma").value(s.gamma);
  w.key("lab_time_per_lap_s").value(s.lab_time_per_lap_s);
  w.key("proper_time_per_lap_s").value(s.proper_time_per_lap_s);
  w.key("proper_centripetal_accel_m_s2").value(s.proper_centripetal_accel);
  w.key("computed_order").value(s.computed_order);
  w.key("quoted_order").value(s.quoted_order);
  w.key("order_reproduced").value(s.order_reproduced);
  w.end_object();
  return w.take();
}

std::string do_sweep(const Options& o) {
  const auto queries = parse_int_list(o.queries_list, "--queries");
  const auto orders = parse_double_list(o.orders_list, "--orders");
  const auto rows = sweep_table(queries, orders);

  if (o.format == "csv") {
    std::string doc = csv_line({"queries", "order", "proper_time", "beta",
                                "energy_ratio", "distance", "accel", "error"});
    for (const SweepRow& r : rows) {
      doc += csv_line({std::to_string(r.queries), fmt_double(r.order),
                       fmt_double(r.proper_time), fmt_double(r.beta),
                       fmt_double(r.energy_ratio), fmt_double(r.distance),
                       r.accel ? fmt_double(*r.accel) : std::string(),
                       r.error});
    }
    return doc;
  }

  JsonWriter w;
  w.begin_object();
  w.key("command").value("sweep");
  w.key("queries").begin_array();
  for (const std::int64_t q : queries) w.value(q);
  w.end_array();
  w.key("orders").begin_array();
  for (const double n : orders) w.value(n);
  w.end_array();
  w.key("rows").begin_array();
  for (const SweepRow& r : rows) {
    w.begin_object();
    w.key("queries").value(r.queries);
    w.key("order").value(r.order);
    w.key("proper_time").value(r.proper_time);
    w.key("beta").value(r.beta);
    w.key("energy_ratio").value(r.energy_ratio);
    w.key("distance").value(r.distance);
    w.key("accel");
    if (r.accel) {
      w.value(*r.accel);
    } else {
      w.null();
    }
    w.key("error").value(r.error);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.take();
}

void deliver(const Options& o, const std::string& doc, std::ostream& out) {
  if (o.output_path.empty()) {
    out << doc;
    return;
  }
  std::ofstream file(o.output_path, std::ios::binary);
  if (file) file << doc;
  if (!file || !file.flush())
    throw UsageError{"cannot write output file: " + o.output_path};
}

const char* kind_of(const domain_error& e) {
  if (dynamic_cast<const saturation_error*>(&e)) return "saturation";
  if (dynamic_cast<const validity_error*>(&e)) return "validity";
  if (dynamic_cast<const infeasibility_error*>(&e)) return "infeasibility";
  if (dynamic_cast<const config_error*>(&e)) return "config";
  return "domain";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  try {
    CLI::App app{"Relativistic itinerary planner for black-box query workloads"};
    app.require_subcommand(1);

    Options o;
    std::map<std::string, CLI::App*> subs;

    const auto add_common = [&](CLI::App* sub) {
      sub->add_option("--format", o.format, "Output format")
          ->check(CLI::IsMember({"json", "csv"}))
          ->capture_default_str();
      sub->add_option("--output", o.output_path,
                      "Write the document to this file instead of stdout");
      sub->add_option("--config", o.config_path,
                      "Flat key = value file; command-line flags win");
    };
    const auto add_workload = [&](CLI::App* sub, bool with_query_time = true) {
      sub->add_option("--queries", o.queries, "Workload size N")
          ->capture_default_str();
      sub->add_option("--order", o.order, "Speedup exponent n >= 1")
          ->capture_default_str();
      if (with_query_time)
        sub->add_option("--query-time-s", o.query_time_s,
                        "Seconds per query (fixed at 1 in natural units)")
            ->capture_default_str();
      sub->add_option("--units", o.units, "natural or si")
          ->check(CLI::IsMember({"natural", "si"}))
          ->capture_default_str();
      sub->add_option("--rest-mass-kg", o.rest_mass_kg,
                      "Payload rest mass, required in SI mode")
          ->capture_default_str();
    };

    CLI::App* plan_inertial_cmd = app.add_subcommand(
        "plan-inertial", "Constant-velocity itinerary for an N-query workload");
    add_workload(plan_inertial_cmd);
    add_common(plan_inertial_cmd);
    subs["plan-inertial"] = plan_inertial_cmd;

    CLI::App* plan_accel_cmd = app.add_subcommand(
        "plan-accel", "Four-leg accelerated return itinerary and fuel bill");
    add_workload(plan_accel_cmd);
    add_common(plan_accel_cmd);
    subs["plan-accel"] = plan_accel_cmd;

    CLI::App* simulate_cmd = app.add_subcommand(
        "simulate", "Integrate a worldline and compare with the closed forms");
    add_workload(simulate_cmd);
    simulate_cmd
        ->add_option("--path", o.path,
                     "Worldline: 1 out-and-back cruise, 2 four-leg return")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    simulate_cmd
        ->add_option("--step", o.step,
                     "Integrator proper-time step; 0 picks a default")
        ->capture_default_str();
    add_common(simulate_cmd);
    subs["simulate"] = simulate_cmd;

    CLI::App* race_cmd = app.add_subcommand(
        "race", "Time-dilated brute force versus an ideal quadratic search");
    add_workload(race_cmd, /*with_query_time=*/false);
    add_common(race_cmd);
    subs["race"] = race_cmd;

    CLI::App* scenario_cmd =
        app.add_subcommand("scenario", "Storage-ring benchmark figures");
    add_common(scenario_cmd);
    subs["scenario"] = scenario_cmd;

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Plan a grid of workloads and orders");
    sweep_cmd
        ->add_option("--queries", o.queries_list,
                     "Comma-separated workload sizes")
        ->capture_default_str();
    sweep_cmd
        ->add_option("--orders", o.orders_list, "Comma-separated exponents")
        ->capture_default_str();
    add_common(sweep_cmd);
    subs["sweep"] = sweep_cmd;

    // Config values arrive as injected flags ahead of the real ones, so the
    // command line wins whenever both name the same option.
    for (auto& [name, sub] : subs)
      for (CLI::Option* opt : sub->get_options())
        opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    const Prescan pre = prescan(argc, argv);
    std::vector<std::string> args;
    args.emplace_back(argv[0]);
    if (!pre.config_path.empty()) {
      if (pre.sub.empty()) throw UsageError{"--config needs a command"};
      CLI::App* sub = subs.at(pre.sub);
      std::set<std::string> allowed;
      for (const CLI::Option* opt : sub->get_options())
        for (const std::string& lname : opt->get_lnames()) allowed.insert(lname);
      allowed.erase("config");
      allowed.erase("help");
      for (int i = 1; i <= pre.sub_index; ++i) args.emplace_back(argv[i]);
      for (const auto& [key, value] : load_config(pre.config_path)) {
        if (!allowed.count(key)) throw UsageError{"unknown config key: " + key};
        args.push_back("--" + key + "=" + value);
      }
      for (int i = pre.sub_index + 1; i < argc; ++i) args.emplace_back(argv[i]);
    } else {
      for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    }
    std::vector<const char*> cargs;
    cargs.reserve(args.size());
    for (const std::string& a : args) cargs.push_back(a.c_str());

    try {
      app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? 0 : 1;
    }

    CLI::App* active = nullptr;
    for (auto& [name, sub] : subs)
      if (sub->parsed()) active = sub;
    if (active == nullptr) throw UsageError{"a command is required"};
    if (o.si() && active->get_option_no_throw("--rest-mass-kg") &&
        active->count("--rest-mass-kg") == 0)
      throw UsageError{"SI mode requires --rest-mass-kg"};

    std::string doc;
    if (plan_inertial_cmd->parsed()) doc = do_plan_inertial(o);
    else if (plan_accel_cmd->parsed()) doc = do_plan_accel(o);
    else if (simulate_cmd->parsed()) doc = do_simulate(o);
    else if (race_cmd->parsed()) doc = do_race(o);
    else if (scenario_cmd->parsed()) doc = do_scenario(o);
    else doc = do_sweep(o);

    deliver(o, doc, out);
    return 0;
  } catch (const UsageError& u) {
    err << "error: " << u.message << "\n";
    return 1;
  } catch (const domain_error& e) {
    err << "error (" << kind_of(e) << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace relspeed::cli
