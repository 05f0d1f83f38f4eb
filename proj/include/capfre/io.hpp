#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "capfre/capacity.hpp"
#include "capfre/chebyshev.hpp"
#include "capfre/learning.hpp"
#include "capfre/relational_system.hpp"

namespace capfre::io {

using json = nlohmann::json;

// Malformed or unreadable input; the message names the offending location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal that parses back to the same double.
inline std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double parse_number(std::string_view text, const std::string& where) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError(where + ": cannot parse '" + std::string(text) + "' as a number");
  }
  return v;
}

inline std::vector<double> parse_number_list(std::string_view text, const std::string& where) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(parse_number(piece, where + " entry " + std::to_string(out.size() + 1)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scale

inline json to_json(const Scale& s) {
  json j;
  if (s.is_chain()) {
    j["kind"] = "finite_chain";
    j["levels"] = s.levels();
  } else {
    j["kind"] = "unit_interval";
  }
  return j;
}

inline Scale scale_from_json(const json& j, double tolerance = kDefaultTolerance) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "unit_interval") return Scale::unit_interval(tolerance);
    if (kind == "finite_chain") {
      return Scale::finite_chain(j.at("levels").get<std::vector<double>>(), tolerance);
    }
    throw InputError("scale kind '" + kind + "' is not finite_chain or unit_interval");
  } catch (const json::exception& e) {
    throw InputError(std::string("scale: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("scale: ") + e.what());
  }
}

// "unit", "uniform:K" (levels l/K) or an explicit comma list of levels.
inline Scale parse_scale_option(const std::string& text, double tolerance = kDefaultTolerance) {
  try {
    if (text == "unit") return Scale::unit_interval(tolerance);
    if (text.rfind("uniform:", 0) == 0) {
      return Scale::uniform_chain(std::stoi(text.substr(8)), tolerance);
    }
    return Scale::finite_chain(parse_number_list(text, "scale"), tolerance);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError("scale '" + text + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Capacity: {n, scale, values[2^n] in ascending mask order}

inline json to_json(const Capacity& mu) {
  json j;
  j["n"] = mu.n();
  j["scale"] = to_json(mu.scale());
  j["values"] = std::vector<double>(mu.values().begin(), mu.values().end());
  return j;
}

// Parses without enforcing the capacity axioms, for diagnostics.
struct RawCapacity {
  int n = 0;
  Scale scale;
  std::vector<double> values;
};

inline RawCapacity raw_capacity_from_json(const json& j, double tolerance = kDefaultTolerance) {
  RawCapacity raw;
  try {
    raw.n = j.at("n").get<int>();
    raw.scale = scale_from_json(j.at("scale"), tolerance);
    raw.values = j.at("values").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("capacity: ") + e.what());
  }
  try {
    check_criteria_count(raw.n);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("capacity: ") + e.what());
  }
  if (raw.values.size() != subset_count(raw.n)) {
    throw InputError("capacity: expected " + std::to_string(subset_count(raw.n)) + " values, got " +
                     std::to_string(raw.values.size()));
  }
  return raw;
}

// Throws CapacityError listing violations when the values are not a capacity.
inline Capacity capacity_from_json(const json& j, double tolerance = kDefaultTolerance) {
  auto raw = raw_capacity_from_json(j, tolerance);
  return Capacity(raw.n, std::move(raw.scale), std::move(raw.values));
}

// ---------------------------------------------------------------------------
// Training data
//   JSON: {n, scale, items: [{x: [...], alpha}]}
//   CSV:  header x1,...,xn,alpha then one row per item

inline json to_json(const TrainingSet& ts) {
  json j;
  j["n"] = ts.n();
  j["scale"] = to_json(ts.scale());
  j["items"] = json::array();
  for (const auto& item : ts.items()) j["items"].push_back({{"x", item.x}, {"alpha", item.alpha}});
  return j;
}

namespace detail {

template <class Fn>
auto wrap_domain(Fn&& fn) {
  try {
    return fn();
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

}  // namespace detail

inline TrainingSet training_set_from_json(const json& j, double tolerance = kDefaultTolerance) {
  int n = 0;
  std::vector<TrainingDatum> items;
  Scale scale;
  try {
    n = j.at("n").get<int>();
    scale = scale_from_json(j.at("scale"), tolerance);
    const auto& arr = j.at("items");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      items.push_back({arr[k].at("x").get<std::vector<double>>(), arr[k].at("alpha").get<double>()});
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("training data: ") + e.what());
  }
  return detail::wrap_domain([&] { return TrainingSet(n, scale, std::move(items)); });
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline std::string trim(std::string s) {
  const auto ws = " \t\r";
  s.erase(0, s.find_first_not_of(ws));
  s.erase(s.find_last_not_of(ws) + 1);
  return s;
}

inline TrainingSet training_set_from_csv(std::istream& in, const Scale& scale) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("CSV: missing header");
  auto header = split_csv_line(line);
  for (auto& h : header) h = trim(h);
  if (header.size() < 2 || header.back() != "alpha") {
    throw InputError("CSV header must be x1,...,xn,alpha");
  }
  const int n = static_cast<int>(header.size()) - 1;
  for (int i = 0; i < n; ++i) {
    if (header[i] != "x" + std::to_string(i + 1)) {
      throw InputError("CSV header column " + std::to_string(i + 1) + " is '" + header[i] +
                       "', expected x" + std::to_string(i + 1));
    }
  }
  std::vector<TrainingDatum> items;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw InputError("CSV line " + std::to_string(lineno) + ": expected " +
                       std::to_string(header.size()) + " fields, got " + std::to_string(cells.size()));
    }
    TrainingDatum d;
    for (int i = 0; i < n; ++i) {
      const std::string where = "CSV line " + std::to_string(lineno) + ", column " + header[i];
      d.x.push_back(parse_number(cells[i], where));
      if (!scale.contains(d.x.back())) throw InputError(where + ": value is not on the scale");
    }
    const std::string where = "CSV line " + std::to_string(lineno) + ", column alpha";
    d.alpha = parse_number(cells.back(), where);
    if (!scale.contains(d.alpha)) throw InputError(where + ": value is not on the scale");
    items.push_back(std::move(d));
  }
  return detail::wrap_domain([&] { return TrainingSet(n, scale, std::move(items)); });
}

inline std::string to_csv(const TrainingSet& ts) {
  std::string out;
  for (int i = 0; i < ts.n(); ++i) out += "x" + std::to_string(i + 1) + ",";
  out += "alpha\n";
  for (const auto& item : ts.items()) {
    for (double v : item.x) out += format_number(v) + ",";
    out += format_number(item.alpha) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relational systems: {kind, matrix (row-major), rhs, column_labels, scale?}

inline json to_json(const RelationalSystem& sys) {
  json j;
  j["kind"] = to_string(sys.kind());
  j["matrix"] = json::array();
  for (std::size_t r = 0; r < sys.equations(); ++r) {
    auto row = sys.matrix().row(r);
    j["matrix"].push_back(std::vector<double>(row.begin(), row.end()));
  }
  j["rhs"] = sys.rhs();
  j["column_labels"] = sys.labels();
  j["scale"] = to_json(sys.scale());
  return j;
}

inline RelationalSystem system_from_json(const json& j, double tolerance = kDefaultTolerance) {
  try {
    const auto kind_text = j.at("kind").get<std::string>();
    Composition kind;
    if (kind_text == "maxmin") {
      kind = Composition::MaxMin;
    } else if (kind_text == "minmax") {
      kind = Composition::MinMax;
    } else {
      throw InputError("system kind '" + kind_text + "' is not maxmin or minmax");
    }
    auto matrix = Matrix::from_rows(j.at("matrix").get<std::vector<std::vector<double>>>());
    auto rhs = j.at("rhs").get<std::vector<double>>();
    Scale scale = j.contains("scale") ? scale_from_json(j.at("scale"), tolerance)
                                      : Scale::unit_interval(tolerance);
    if (j.contains("column_labels")) {
      auto labels = j.at("column_labels").get<std::vector<ColumnLabel>>();
      return detail::wrap_domain([&] {
        return RelationalSystem(kind, std::move(matrix), std::move(rhs), std::move(labels), scale);
      });
    }
    return detail::wrap_domain(
        [&] { return RelationalSystem(kind, std::move(matrix), std::move(rhs), scale); });
  } catch (const json::exception& e) {
    throw InputError(std::string("system: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const LearnReport& r) {
  json j;
  j["mode"] = to_string(r.mode);
  j["q"] = r.q ? json(*r.q) : json(nullptr);
  j["consistent"] = r.consistent;
  j["boundary_ok"] = r.boundary_ok;
  j["distance"] = r.distance ? json(*r.distance) : json(nullptr);
  j["capacity"] = r.capacity ? to_json(*r.capacity) : json(nullptr);
  j["residuals"] = r.residuals;
  j["witness"] = {{"subset", format_subset(r.witness.subset)}, {"value", r.witness.value}};
  j["message"] = r.message;
  return j;
}

inline json to_json(const ChebyshevDistance& d) {
  return {{"value", d.value}, {"per_row", d.per_row}};
}

// ---------------------------------------------------------------------------
// Files

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// JSON by extension, CSV otherwise. CSV files carry no scale, so `csv_scale` applies.
inline TrainingSet load_training_set(const std::string& path, const Scale& csv_scale) {
  if (ends_with(path, ".json")) return training_set_from_json(read_json_file(path), csv_scale.tolerance());
  std::istringstream in(read_file(path));
  return training_set_from_csv(in, csv_scale);
}

}  // namespace capfre::io
