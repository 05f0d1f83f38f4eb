// capfre: learn, evaluate and check Sugeno-integral capacities from the command line.
//
// Exit codes: 0 success, 1 input error, 2 condition failure (report still
// written), 3 oracle budget refusal.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "capfre/capfre.hpp"
#include "capfre/io.hpp"
#include "oracle_suite.hpp"

namespace {

using namespace capfre;
using io::json;

enum Exit : int { kOk = 0, kInputError = 1, kConditionFailed = 2, kBudgetRefused = 3 };

struct Options {
  std::string data;
  std::string capacity;
  std::string system;
  std::string scale = "unit";
  std::string mode = "greatest";
  std::optional<int> q;
  bool approx = false;
  std::string type = "maxmin";
  std::string out;
  std::string format = "json";
  double tolerance = kDefaultTolerance;
  double budget = oracle::kDefaultBudget;
  std::string object;
  // oracle
  int n = 2;
  int items = 3;
  int trials = 5;
  int steps = 20;
  std::uint64_t seed = 1;
};

std::string fixed4(double v) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(4) << v;
  return ss.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    io::write_file(opt.out, text);
  }
}

std::string capacity_table(const Capacity& mu) {
  std::string s;
  for (Mask a = 0; a <= full_mask(mu.n()); ++a) s += "  " + format_subset(a) + "\t" + fixed4(mu[a]) + "\n";
  return s;
}

Scale csv_scale(const Options& opt) { return io::parse_scale_option(opt.scale, opt.tolerance); }

int cmd_learn(const Options& opt) {
  const auto ts = io::load_training_set(opt.data, csv_scale(opt));
  LearnMode mode;
  std::optional<int> q = opt.q;
  if (opt.mode == "greatest" || opt.mode == "lowest") {
    const bool upper = opt.mode == "greatest";
    // The approximate routes at q = n cover plain (non-reduced) capacities.
    if (opt.approx) {
      mode = upper ? LearnMode::ApproxQMax : LearnMode::ApproxQMin;
      q = ts.n();
    } else {
      mode = upper ? LearnMode::Greatest : LearnMode::Lowest;
    }
  } else if (opt.mode == "qmax" || opt.mode == "qmin") {
    if (!q) throw io::InputError("--mode " + opt.mode + " requires --q");
    const bool upper = opt.mode == "qmax";
    mode = opt.approx ? (upper ? LearnMode::ApproxQMax : LearnMode::ApproxQMin)
                      : (upper ? LearnMode::QMax : LearnMode::QMin);
  } else {
    throw io::InputError("unknown mode '" + opt.mode + "'");
  }
  if (q && (*q < 1 || *q > ts.n())) {
    throw io::InputError("--q " + std::to_string(*q) + " outside [1, " + std::to_string(ts.n()) + "]");
  }
  if (opt.approx && ts.scale().is_chain()) {
    std::cerr << "warning: approximate learning works on [0,1]; capacity values may fall off the chain\n";
  }

  const auto report = learn(ts, mode, q);
  const auto violations = validate_data(ts);

  if (opt.format == "table") {
    std::string s = std::string("mode         ") + to_string(report.mode) + "\n";
    if (report.q) s += "q            " + std::to_string(*report.q) + "\n";
    s += std::string("consistent   ") + (report.consistent ? "yes" : "no") + "\n";
    s += std::string("boundary_ok  ") + (report.boundary_ok ? "yes" : "no") + "\n";
    if (report.distance) s += "distance     " + fixed4(*report.distance) + "\n";
    s += "witness      " + format_subset(report.witness.subset) + " = " + fixed4(report.witness.value) + "\n";
    if (!report.message.empty()) s += "message      " + report.message + "\n";
    for (const auto& v : violations) s += "data         " + describe(v) + "\n";
    if (report.capacity) s += "capacity\n" + capacity_table(*report.capacity);
    emit(opt, s);
  } else {
    auto j = io::to_json(report);
    j["data_violations"] = json::array();
    for (const auto& v : violations) j["data_violations"].push_back(describe(v));
    emit(opt, j.dump(2) + "\n");
  }
  if (report.capacity && !opt.capacity.empty()) {
    io::write_file(opt.capacity, io::to_json(*report.capacity).dump(2) + "\n");
  }
  if (!report.capacity) std::cerr << "no capacity: " << report.message << "\n";
  return report.capacity ? kOk : kConditionFailed;
}

Capacity load_capacity(const Options& opt) {
  const auto j = io::read_json_file(opt.capacity);
  auto raw = io::raw_capacity_from_json(j, opt.tolerance);
  auto violations = capacity_violations(raw.values, raw.n, raw.scale);
  if (!violations.empty()) throw CapacityError(std::move(violations));
  return Capacity(raw.n, std::move(raw.scale), std::move(raw.values));
}

int cmd_eval(const Options& opt) {
  const auto mu = load_capacity(opt);
  const auto x = io::parse_number_list(opt.object, "object");
  if (x.size() != static_cast<std::size_t>(mu.n())) {
    throw io::InputError("object has " + std::to_string(x.size()) + " coordinates, capacity has " +
                         std::to_string(mu.n()) + " criteria");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!mu.scale().contains(x[i])) {
      throw io::InputError("object coordinate x" + std::to_string(i + 1) + " is not on the scale");
    }
  }
  const double maxmin = sugeno_maxmin(mu, x);
  const double minmax = sugeno_minmax(mu, x);
  if (maxmin != minmax) {
    std::cerr << "internal error: max-min and min-max forms disagree\n";
    return kInputError;
  }
  if (opt.format == "table") {
    emit(opt, "S = " + fixed4(maxmin) + "\n");
  } else {
    emit(opt, json{{"value", maxmin}, {"maxmin", maxmin}, {"minmax", minmax}}.dump(2) + "\n");
  }
  return kOk;
}

int cmd_check(const Options& opt) {
  const auto raw = io::raw_capacity_from_json(io::read_json_file(opt.capacity), opt.tolerance);
  const auto violations = capacity_violations(raw.values, raw.n, raw.scale);
  json j;
  j["is_capacity"] = violations.empty();
  j["violations"] = json::array();
  for (const auto& v : violations) j["violations"].push_back(describe(v));
  if (violations.empty()) {
    const Capacity mu(raw.n, raw.scale, raw.values);
    if (opt.q && (*opt.q < 1 || *opt.q > mu.n())) throw io::InputError("--q out of range");
    json maxitive = json::object();
    json minitive = json::object();
    for (int q = 1; q <= mu.n(); ++q) {
      if (opt.q && q != *opt.q) continue;
      maxitive[std::to_string(q)] = is_q_maxitive(mu, q);
      minitive[std::to_string(q)] = is_q_minitive(mu, q);
    }
    j["q_maxitive"] = maxitive;
    j["q_minitive"] = minitive;
  }
  if (opt.format == "table") {
    std::string s = std::string("capacity: ") + (violations.empty() ? "true" : "false") + "\n";
    for (const auto& v : violations) s += "  " + describe(v) + "\n";
    if (violations.empty()) {
      for (const auto& [q, v] : j["q_maxitive"].items()) {
        s += q + "-maxitive: " + (v.get<bool>() ? "true" : "false") + "\n";
      }
      for (const auto& [q, v] : j["q_minitive"].items()) {
        s += q + "-minitive: " + (v.get<bool>() ? "true" : "false") + "\n";
      }
    }
    emit(opt, s);
  } else {
    emit(opt, j.dump(2) + "\n");
  }
  return violations.empty() ? kOk : kConditionFailed;
}

int cmd_distance(const Options& opt) {
  std::optional<RelationalSystem> sys;
  if (!opt.system.empty()) {
    sys = io::system_from_json(io::read_json_file(opt.system), opt.tolerance);
  } else if (!opt.data.empty()) {
    const auto ts = io::load_training_set(opt.data, csv_scale(opt));
    const int q = opt.q.value_or(ts.n());
    if (q < 1 || q > ts.n()) throw io::InputError("--q out of range");
    if (opt.type == "maxmin") {
      sys = build_maxmin_system(ts, q);
    } else if (opt.type == "minmax") {
      sys = build_minmax_system(ts, q);
    } else {
      throw io::InputError("--type must be maxmin or minmax");
    }
  } else {
    throw io::InputError("distance needs --data or --system");
  }
  if (sys->scale().is_chain()) {
    std::cerr << "warning: distances are computed on [0,1]; bounds may fall off the chain\n";
  }
  const auto embedded = sys->embedded();
  const bool upper = embedded.kind() == Composition::MaxMin;
  const auto d = chebyshev_distance(embedded);
  const auto bound = upper ? upper_bound_rhs(embedded.rhs(), d.value) : lower_bound_rhs(embedded.rhs(), d.value);
  const auto solution = upper ? greatest_approx_solution(embedded, d.value) : lowest_approx_solution(embedded, d.value);

  json labels = json::array();
  for (auto l : embedded.labels()) labels.push_back(opt.system.empty() ? json(format_subset(l)) : json(l));
  json j{{"type", to_string(embedded.kind())},
         {"distance", d.value},
         {"per_row", d.per_row},
         {"consistent", is_consistent(embedded)},
         {upper ? "upper_bound_rhs" : "lower_bound_rhs", bound},
         {upper ? "greatest_approx_solution" : "lowest_approx_solution", solution},
         {"column_labels", labels}};
  if (opt.format == "table") {
    std::string s = std::string(upper ? "Delta = " : "Nabla = ") + fixed4(d.value) + "\n";
    for (std::size_t i = 0; i < d.per_row.size(); ++i) {
      s += "  row " + std::to_string(i + 1) + "\t" + fixed4(d.per_row[i]) + "\n";
    }
    emit(opt, s);
  } else {
    emit(opt, j.dump(2) + "\n");
  }
  return kOk;
}

int cmd_oracle(const Options& opt) {
  cli::OracleReport report;
  if (!opt.system.empty()) {
    const auto sys = io::system_from_json(io::read_json_file(opt.system), opt.tolerance);
    auto grid = oracle::GridSpec::uniform(opt.steps, 1);
    grid.budget = opt.budget;
    cli::check_system(sys, grid, "system", report);
  } else {
    if (opt.n < 1 || opt.n > kMaxCriteria) throw io::InputError("--n out of range");
    report = cli::random_suite(opt.n, opt.items, opt.trials, opt.steps, opt.seed, opt.budget);
  }
  emit(opt, report.to_json().dump(2) + "\n");
  return report.all_passed() ? kOk : kConditionFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learn Sugeno-integral capacities with fuzzy relational equations"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "Write output to this file instead of stdout");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--tolerance", opt.tolerance, "Tolerance for derived comparisons")->check(CLI::NonNegativeNumber);
  };

  auto* learn = app.add_subcommand("learn", "Learn a capacity from training data");
  learn->add_option("--data", opt.data, "Training data (.csv or .json)")->required();
  learn->add_option("--scale", opt.scale, "Scale for CSV data: unit, uniform:K, or a level list");
  learn->add_option("--mode", opt.mode, "greatest | lowest | qmax | qmin")
      ->check(CLI::IsMember({"greatest", "lowest", "qmax", "qmin"}));
  learn->add_option("--q", opt.q, "Cardinality bound for qmax/qmin");
  learn->add_flag("--approx", opt.approx, "Chebyshev-optimal approximate capacity");
  learn->add_option("--capacity", opt.capacity, "Also write the learned capacity here");
  common(learn);

  auto* eval = app.add_subcommand("eval", "Sugeno integral of an object");
  eval->add_option("--capacity", opt.capacity, "Capacity JSON")->required();
  eval->add_option("--x", opt.object, "Comma-separated object, e.g. 0.15,0.2,0.3")->required();
  common(eval);

  auto* check = app.add_subcommand("check", "Capacity axioms and q-maxitivity/q-minitivity");
  check->add_option("--capacity", opt.capacity, "Capacity JSON")->required();
  check->add_option("--q", opt.q, "Only this q");
  common(check);

  auto* distance = app.add_subcommand("distance", "Chebyshev distance of a max-min or min-max system");
  distance->add_option("--data", opt.data, "Training data (.csv or .json)");
  distance->add_option("--system", opt.system, "System JSON");
  distance->add_option("--scale", opt.scale, "Scale for CSV data");
  distance->add_option("--q", opt.q, "Cardinality bound (default n)");
  distance->add_option("--type", opt.type, "maxmin | minmax")->check(CLI::IsMember({"maxmin", "minmax"}));
  common(distance);

  auto* orc = app.add_subcommand("oracle", "Compare closed forms against brute-force enumeration");
  orc->add_option("--system", opt.system, "Check one system JSON instead of the random suite");
  orc->add_option("--n", opt.n, "Criteria count for the random suite");
  orc->add_option("--items", opt.items, "Training items per random trial");
  orc->add_option("--trials", opt.trials, "Random trials");
  orc->add_option("--steps", opt.steps, "Grid levels are l/steps");
  orc->add_option("--seed", opt.seed, "Random seed");
  orc->add_option("--budget", opt.budget, "Maximum enumerated candidates");
  common(orc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*learn) return cmd_learn(opt);
    if (*eval) return cmd_eval(opt);
    if (*check) return cmd_check(opt);
    if (*distance) return cmd_distance(opt);
    if (*orc) return cmd_oracle(opt);
  } catch (const oracle::BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kBudgetRefused;
  } catch (const CapacityError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
