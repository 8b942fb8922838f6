#include "distid/report.hpp"

#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace distid {
namespace {

using nlohmann::json;

json encode(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double decode(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw json::other_error::create(501, "unexpected string for a number: " + s, &j);
  }
  return j.get<double>();
}

std::string cell(std::uint64_t v) { return std::to_string(v); }
std::string cell(bool v) { return v ? "true" : "false"; }
std::string cell(double v) { return format_double(v); }

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> bound_cells(const BoundReport& r) {
  return {cell(r.S),
          cell(r.log_S),
          r.upper.applicable() ? cell(*r.upper.value) : std::string("NA"),
          cell(r.upper.applicable()),
          cell(r.upper.clamped),
          cell(r.lower)};
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", value);
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += quote(cells[i]);
    }
    out += '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

CsvTable bounds_csv(const std::vector<BoundReport>& reports) {
  CsvTable t;
  t.header = {"n", "A", "S", "log_S", "upper", "upper_applicable", "upper_clamped", "lower"};
  for (const auto& r : reports) {
    std::vector<std::string> row{cell(r.n), cell(r.A)};
    for (auto& c : bound_cells(r)) row.push_back(std::move(c));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable simulate_csv(const std::vector<SimulationRow>& rows) {
  std::uint64_t max_a = 2;
  for (const auto& r : rows) max_a = std::max(max_a, r.estimate.A);
  CsvTable t;
  t.header = {"n", "A", "trials", "errors", "p_hat", "stderr", "stderr_placeholder"};
  for (std::uint64_t r = 2; r <= max_a; ++r) t.header.push_back(fmt::format("r{}_count", r));
  for (const char* h : {"single_cycle_fraction", "S", "log_S", "upper", "upper_applicable",
                        "upper_clamped", "lower"}) {
    t.header.emplace_back(h);
  }
  for (const auto& row : rows) {
    const McEstimate& e = row.estimate;
    std::vector<std::string> cells{cell(e.n),     cell(e.A),       cell(e.trials),
                                   cell(e.errors), cell(e.p_hat),  cell(e.stderr_),
                                   cell(e.stderr_placeholder)};
    for (std::uint64_t r = 2; r <= max_a; ++r) {
      const auto it = e.r_histogram.find(r);
      cells.push_back(cell(it == e.r_histogram.end() ? std::uint64_t{0} : it->second));
    }
    cells.push_back(cell(e.single_cycle_fraction));
    for (auto& c : bound_cells(row.bound)) cells.push_back(std::move(c));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

CsvTable exponent_csv(const ExponentFit& fit) {
  CsvTable t;
  t.header = {"n", "trials", "errors", "p_hat", "used_in_fit", "slope", "target", "relative_error"};
  for (std::size_t i = 0; i < fit.n_grid.size(); ++i) {
    t.rows.push_back({cell(fit.n_grid[i]), cell(fit.trials), cell(fit.errors[i]),
                      cell(fit.p_hats[i]), cell(static_cast<bool>(fit.used[i])), cell(fit.slope),
                      cell(fit.target), cell(fit.relative_error())});
  }
  return t;
}

CsvTable lemma_csv(const std::vector<LemmaRow>& rows) {
  CsvTable t;
  t.header = {"check", "k", "r", "trial", "lhs", "rhs", "holds"};
  for (const auto& r : rows) {
    t.rows.push_back({r.check, cell(r.k), cell(r.r), cell(r.trial), cell(r.lhs), cell(r.rhs),
                      cell(r.holds)});
  }
  return t;
}

CsvTable trend_csv(const TrendReport& report) {
  CsvTable t;
  t.header = {"n", "A", "log_S", "pairs_evaluated", "sampled", "in_window", "slope", "verdict"};
  const std::size_t first_window = report.points.size() - report.window;
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const auto& p = report.points[i];
    t.rows.push_back({cell(p.n), cell(p.A), cell(p.log_S), cell(p.pairs_evaluated),
                      cell(p.sampled), cell(i >= first_window), cell(report.slope),
                      to_string(report.verdict)});
  }
  return t;
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"n", r.n},
           {"A", r.A},
           {"S", encode(r.S)},
           {"log_S", encode(r.log_S)},
           {"upper", r.upper.applicable() ? encode(*r.upper.value) : json(nullptr)},
           {"upper_applicable", r.upper.applicable()},
           {"upper_clamped", r.upper.clamped},
           {"lower", encode(r.lower)}};
}

void from_json(const json& j, BoundReport& r) {
  r.n = j.at("n").get<std::uint64_t>();
  r.A = j.at("A").get<std::uint64_t>();
  r.S = decode(j.at("S"));
  r.log_S = decode(j.at("log_S"));
  r.upper = UpperBound{};
  if (!j.at("upper").is_null()) r.upper.value = decode(j.at("upper"));
  r.upper.clamped = j.at("upper_clamped").get<bool>();
  r.lower = decode(j.at("lower"));
}

void to_json(json& j, const McEstimate& e) {
  json hist = json::object();
  for (const auto& [r, c] : e.r_histogram) hist[std::to_string(r)] = c;
  j = json{{"n", e.n},
           {"A", e.A},
           {"trials", e.trials},
           {"errors", e.errors},
           {"p_hat", encode(e.p_hat)},
           {"stderr", encode(e.stderr_)},
           {"stderr_placeholder", e.stderr_placeholder},
           {"r_histogram", hist},
           {"single_cycle_errors", e.single_cycle_errors},
           {"single_cycle_fraction", encode(e.single_cycle_fraction)}};
}

void from_json(const json& j, McEstimate& e) {
  e.n = j.at("n").get<std::uint64_t>();
  e.A = j.at("A").get<std::uint64_t>();
  e.trials = j.at("trials").get<std::uint64_t>();
  e.errors = j.at("errors").get<std::uint64_t>();
  e.p_hat = decode(j.at("p_hat"));
  e.stderr_ = decode(j.at("stderr"));
  e.stderr_placeholder = j.at("stderr_placeholder").get<bool>();
  e.r_histogram.clear();
  for (const auto& [key, value] : j.at("r_histogram").items()) {
    e.r_histogram[std::stoull(key)] = value.get<std::uint64_t>();
  }
  e.single_cycle_errors = j.at("single_cycle_errors").get<std::uint64_t>();
  e.single_cycle_fraction = decode(j.at("single_cycle_fraction"));
}

void to_json(json& j, const SimulationRow& r) { j = json{{"estimate", r.estimate}, {"bound", r.bound}}; }

void from_json(const json& j, SimulationRow& r) {
  r.estimate = j.at("estimate").get<McEstimate>();
  r.bound = j.at("bound").get<BoundReport>();
}

void to_json(json& j, const ExponentFit& f) {
  json p_hats = json::array();
  for (double p : f.p_hats) p_hats.push_back(encode(p));
  std::vector<bool> used(f.used.begin(), f.used.end());
  j = json{{"n_grid", f.n_grid},
           {"errors", f.errors},
           {"p_hats", p_hats},
           {"used_in_fit", used},
           {"trials", f.trials},
           {"slope", encode(f.slope)},
           {"target", encode(f.target)},
           {"relative_error", encode(f.relative_error())}};
}

void from_json(const json& j, ExponentFit& f) {
  f.n_grid = j.at("n_grid").get<std::vector<std::uint64_t>>();
  f.errors = j.at("errors").get<std::vector<std::uint64_t>>();
  f.p_hats.clear();
  for (const auto& p : j.at("p_hats")) f.p_hats.push_back(decode(p));
  f.used = j.at("used_in_fit").get<std::vector<bool>>();
  f.trials = j.at("trials").get<std::uint64_t>();
  f.slope = decode(j.at("slope"));
  f.target = decode(j.at("target"));
}

void to_json(json& j, const LemmaRow& r) {
  j = json{{"check", r.check}, {"k", r.k},           {"r", r.r},        {"trial", r.trial},
           {"lhs", encode(r.lhs)}, {"rhs", encode(r.rhs)}, {"holds", r.holds}};
}

void from_json(const json& j, LemmaRow& r) {
  r.check = j.at("check").get<std::string>();
  r.k = j.at("k").get<std::uint64_t>();
  r.r = j.at("r").get<std::uint64_t>();
  r.trial = j.at("trial").get<std::uint64_t>();
  r.lhs = decode(j.at("lhs"));
  r.rhs = decode(j.at("rhs"));
  r.holds = j.at("holds").get<bool>();
}

void to_json(json& j, const TrendPoint& p) {
  j = json{{"n", p.n},
           {"A", encode(p.A)},
           {"log_S", encode(p.log_S)},
           {"pairs_evaluated", p.pairs_evaluated},
           {"sampled", p.sampled}};
}

void from_json(const json& j, TrendPoint& p) {
  p.n = j.at("n").get<std::uint64_t>();
  p.A = decode(j.at("A"));
  p.log_S = decode(j.at("log_S"));
  p.pairs_evaluated = j.at("pairs_evaluated").get<std::uint64_t>();
  p.sampled = j.at("sampled").get<bool>();
}

void to_json(json& j, const TrendReport& r) {
  j = json{{"points", r.points},
           {"slope", encode(r.slope)},
           {"window", r.window},
           {"verdict", to_string(r.verdict)},
           {"note", "empirical trend over the last window of the grid, not a proof"}};
}

void from_json(const json& j, TrendReport& r) {
  r.points = j.at("points").get<std::vector<TrendPoint>>();
  r.slope = decode(j.at("slope"));
  r.window = j.at("window").get<std::size_t>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
}

}  // namespace distid
