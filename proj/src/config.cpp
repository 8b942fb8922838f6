#include "distid/config.hpp"

#include <algorithm>
#include <initializer_list>
#include <json.hpp>
#include <set>

#include "distid/errors.hpp"

namespace distid {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!keys.contains(key)) {
      throw ConfigError("unknown key '" + key + "'" + (where.empty() ? "" : " in " + where));
    }
  }
}

template <typename T>
T get(const json& obj, const std::string& key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("key '" + key + "'" + (where.empty() ? "" : " in " + where) +
                      " has the wrong type");
  }
}

std::uint64_t get_count(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ConfigError("key '" + key + "'" + (where.empty() ? "" : " in " + where) +
                      " must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<std::uint64_t> get_counts(const json& obj, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_array()) throw ConfigError("key '" + key + "' must be a list of integers");
  std::vector<std::uint64_t> out;
  for (const auto& item : v) {
    if (!item.is_number_integer() || item.get<std::int64_t>() < 0) {
      throw ConfigError("key '" + key + "' must be a list of nonnegative integers");
    }
    out.push_back(item.get<std::uint64_t>());
  }
  return out;
}

FamilySpec parse_family(const json& obj, const std::string& where, bool size_optional) {
  if (!obj.is_object() || !obj.contains("kind")) throw ConfigError(where + ": missing 'kind'");
  const auto kind = get<std::string>(obj, "kind", where);
  if (kind == "explicit") {
    reject_unknown(obj, where, {"kind", "members"});
    return ExplicitFamily{get<std::vector<std::vector<double>>>(obj, "members", where)};
  }
  auto size_of = [&](std::uint64_t fallback) {
    if (obj.contains("size")) return get_count(obj, "size", where);
    if (!size_optional) throw ConfigError(where + ": missing 'size'");
    return fallback;
  };
  if (kind == "binary-grid") {
    reject_unknown(obj, where, {"kind", "size", "theta_min", "theta_max"});
    BinaryGrid g;
    g.size = size_of(2);
    if (obj.contains("theta_min")) g.theta_min = get<double>(obj, "theta_min", where);
    if (obj.contains("theta_max")) g.theta_max = get<double>(obj, "theta_max", where);
    return g;
  }
  if (kind == "random-simplex") {
    reject_unknown(obj, where, {"kind", "size", "alphabet", "seed"});
    RandomSimplex r;
    r.size = size_of(2);
    if (!obj.contains("alphabet")) throw ConfigError(where + ": missing 'alphabet'");
    r.alphabet = get_count(obj, "alphabet", where);
    if (obj.contains("seed")) r.seed = Seed{get_count(obj, "seed", where)};
    return r;
  }
  throw ConfigError(where + ": unknown family kind '" + kind + "'");
}

GrowthRule parse_growth(const json& obj) {
  const std::string where = "sequence.growth";
  if (!obj.is_object() || !obj.contains("kind")) throw ConfigError(where + ": missing 'kind'");
  const auto kind = get<std::string>(obj, "kind", where);
  GrowthRule g;
  if (kind == "constant") {
    reject_unknown(obj, where, {"kind", "size"});
    g.kind = GrowthRule::Kind::kConstant;
    g.size = get_count(obj, "size", where);
  } else if (kind == "polynomial") {
    reject_unknown(obj, where, {"kind", "degree"});
    g.kind = GrowthRule::Kind::kPolynomial;
    g.degree = get<double>(obj, "degree", where);
  } else if (kind == "exponential") {
    reject_unknown(obj, where, {"kind", "rate"});
    g.kind = GrowthRule::Kind::kExponential;
    g.rate = get<double>(obj, "rate", where);
  } else {
    throw ConfigError(where + ": unknown growth kind '" + kind + "'");
  }
  return g;
}

FamilySequenceSpec parse_sequence(const json& obj) {
  reject_unknown(obj, "sequence", {"growth", "generator", "pair_budget", "seed"});
  if (!obj.contains("growth") || !obj.contains("generator")) {
    throw ConfigError("sequence: needs 'growth' and 'generator'");
  }
  FamilySequenceSpec spec;
  spec.growth = parse_growth(obj.at("growth"));
  spec.generator = parse_family(obj.at("generator"), "sequence.generator", true);
  if (obj.contains("pair_budget")) spec.pair_budget = get_count(obj, "pair_budget", "sequence");
  if (obj.contains("seed")) spec.seed = Seed{get_count(obj, "seed", "sequence")};
  return spec;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  const auto end = text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size()));
  return 1 + static_cast<std::size_t>(std::count(text.begin(), end, '\n'));
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::kBounds:
      return "bounds";
    case Command::kSimulate:
      return "simulate";
    case Command::kLemma:
      return "lemma";
    case Command::kExponent:
      return "exponent";
    case Command::kSweep:
      return "sweep";
  }
  return "bounds";
}

Command command_from_string(const std::string& s) {
  for (Command c : {Command::kBounds, Command::kSimulate, Command::kLemma, Command::kExponent,
                    Command::kSweep}) {
    if (to_string(c) == s) return c;
  }
  throw ConfigError("unknown command '" + s + "'");
}

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config syntax error at line " + std::to_string(line_of(text, e.byte)) +
                      ": " + e.what());
  }
  reject_unknown(root, "",
                 {"command", "family", "sequence", "n", "n_grid", "trials", "seed", "out", "format",
                  "workers", "k", "r", "weights", "facts"});

  RunConfig cfg;
  if (root.contains("command")) cfg.command = command_from_string(get<std::string>(root, "command", ""));
  if (root.contains("family")) cfg.family = parse_family(root.at("family"), "family", false);
  if (root.contains("sequence")) cfg.sequence = parse_sequence(root.at("sequence"));
  if (root.contains("n") && root.contains("n_grid")) {
    throw ConfigError("give either 'n' or 'n_grid', not both");
  }
  if (root.contains("n")) cfg.n_grid = {get_count(root, "n", "")};
  if (root.contains("n_grid")) cfg.n_grid = get_counts(root, "n_grid");
  if (root.contains("trials")) cfg.trials = get_count(root, "trials", "");
  if (root.contains("seed")) cfg.seed = Seed{get_count(root, "seed", "")};
  if (root.contains("out")) cfg.out = get<std::string>(root, "out", "");
  if (root.contains("format")) {
    const auto f = get<std::string>(root, "format", "");
    if (f == "csv") {
      cfg.format = OutputFormat::kCsv;
    } else if (f == "json") {
      cfg.format = OutputFormat::kJson;
    } else {
      throw ConfigError("format must be 'csv' or 'json', got '" + f + "'");
    }
  }
  if (root.contains("workers")) cfg.workers = static_cast<int>(get_count(root, "workers", ""));
  if (root.contains("k")) {
    cfg.k_values = root.at("k").is_array() ? get_counts(root, "k")
                                           : std::vector<std::uint64_t>{get_count(root, "k", "")};
  }
  if (root.contains("r")) {
    cfg.r_values = root.at("r").is_array() ? get_counts(root, "r")
                                           : std::vector<std::uint64_t>{get_count(root, "r", "")};
  }
  if (root.contains("weights")) cfg.weights = get<std::string>(root, "weights", "");
  if (root.contains("facts")) cfg.facts = get<bool>(root, "facts", "");
  validate_config(cfg);
  return cfg;
}

void validate_config(const RunConfig& cfg) {
  for (std::size_t i = 1; i < cfg.n_grid.size(); ++i) {
    if (cfg.n_grid[i] <= cfg.n_grid[i - 1]) throw ConfigError("n_grid must be strictly increasing");
  }
  for (std::uint64_t n : cfg.n_grid) {
    if (n == 0) throw ConfigError("blocklengths must be >= 1");
  }
  if (cfg.workers < 1) throw ConfigError("workers must be >= 1");
  if (cfg.weights != "random" && cfg.weights != "equal") {
    throw ConfigError("weights must be 'random' or 'equal'");
  }
  if (!cfg.command) return;

  const auto need_family = [&] {
    if (!cfg.family) throw ConfigError(to_string(*cfg.command) + " requires 'family'");
  };
  const auto need_grid = [&] {
    if (cfg.n_grid.empty()) throw ConfigError(to_string(*cfg.command) + " requires 'n' or 'n_grid'");
  };
  switch (*cfg.command) {
    case Command::kBounds:
      need_family();
      need_grid();
      break;
    case Command::kSimulate:
      need_family();
      need_grid();
      if (cfg.trials == 0) throw ConfigError("trials must be >= 1");
      break;
    case Command::kExponent:
      need_family();
      need_grid();
      if (cfg.trials == 0) throw ConfigError("trials must be >= 1");
      if (family_size(*cfg.family) != 2) throw ConfigError("exponent requires a family of exactly 2");
      break;
    case Command::kLemma:
      if (cfg.k_values.empty()) throw ConfigError("lemma requires 'k'");
      if (cfg.trials == 0) throw ConfigError("trials must be >= 1");
      break;
    case Command::kSweep:
      if (!cfg.sequence) throw ConfigError("sweep requires 'sequence'");
      need_grid();
      break;
  }
}

std::string config_reference() {
  return R"(Config file (JSON). All keys optional unless a command needs them:
  command   "bounds" | "simulate" | "lemma" | "exponent" | "sweep" (the subcommand wins)
  family    {"kind": "explicit", "members": [[p0, p1, ...], ...]}
            {"kind": "binary-grid", "size": A, "theta_min": 0.1, "theta_max": 0.9}
            {"kind": "random-simplex", "size": A, "alphabet": m, "seed": 24301}
  sequence  {"growth": {"kind": "constant", "size": A}
                     | {"kind": "polynomial", "degree": d}      A_n = ceil(n^d)
                     | {"kind": "exponential", "rate": beta},   A_n = ceil(exp(beta n))
             "generator": <family without size>, "pair_budget": 10000, "seed": 24301}
  n | n_grid    blocklength or strictly increasing list of blocklengths
  trials    Monte Carlo trials per point (default 10000); lemma: graphs per (k, r)
  seed      root seed (default 24301 = 0x5EED)
  out       output path (default stdout)
  format    "csv" (default) | "json"
  workers   OpenMP threads (default 1); output does not depend on it
  k, r      lemma: vertex counts and cycle lengths (r defaults to 2..k)
  weights   lemma: "random" (i.i.d. U[0,1), default) | "equal" (all 1)
  facts     lemma: add counting-identity rows for even r when k <= 6 (default true)
exponent uses family members 0 and 1 as (p, q).
Exit codes: 0 ok, 2 config error, 3 precondition violation, 4 I/O failure.
)";
}

}  // namespace distid
