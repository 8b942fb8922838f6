#include "distid/run.hpp"

#include <fstream>

#include "distid/errors.hpp"
#include "distid/graph.hpp"
#include "distid/report.hpp"

namespace distid {
namespace {

using nlohmann::json;

std::string emit(OutputFormat format, const CsvTable& table, const json& doc) {
  return format == OutputFormat::kCsv ? table.str() : doc.dump(2) + "\n";
}

std::string run_bounds(const RunConfig& cfg) {
  const DistributionFamily family = make_family(*cfg.family);
  std::vector<BoundReport> reports;
  for (std::uint64_t n : cfg.n_grid) reports.push_back(make_bound_report(family, n));
  return emit(cfg.format, bounds_csv(reports), json(reports));
}

std::string run_simulate(const RunConfig& cfg) {
  const DistributionFamily family = make_family(*cfg.family);
  std::vector<SimulationRow> rows;
  for (std::uint64_t n : cfg.n_grid) {
    rows.push_back({estimate_error_prob(family, n, cfg.trials, derive_seed(cfg.seed, n), cfg.workers),
                    make_bound_report(family, n)});
  }
  return emit(cfg.format, simulate_csv(rows), json(rows));
}

std::string run_exponent(const RunConfig& cfg) {
  const DistributionFamily family = make_family(*cfg.family);
  const ExponentFit fit =
      pairwise_error_exponent(family[0], family[1], cfg.n_grid, cfg.trials, cfg.seed, cfg.workers);
  return emit(cfg.format, exponent_csv(fit), json(fit));
}

std::string run_lemma(const RunConfig& cfg) {
  std::vector<LemmaRow> rows;
  for (std::uint64_t k : cfg.k_values) {
    std::vector<std::uint64_t> rs = cfg.r_values;
    if (rs.empty()) {
      for (std::uint64_t r = 2; r <= k; ++r) rs.push_back(r);
    }
    for (std::uint64_t r : rs) {
      if (r < 2 || r > k) {
        throw PreconditionError("lemma: need 2 <= r <= k (k=" + std::to_string(k) +
                                ", r=" + std::to_string(r) + ")");
      }
      const Seed cell_seed = derive_seed(derive_seed(cfg.seed, k), r);
      for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        const auto graph = cfg.weights == "equal"
                               ? WeightedCompleteGraph::uniform(k, 1.0)
                               : WeightedCompleteGraph::random(k, derive_seed(cell_seed, trial));
        const LemmaCheck check = verify_lemma(graph, r);
        rows.push_back({"lemma", k, r, trial, check.lhs, check.rhs, check.holds});
      }
      if (cfg.facts && r % 2 == 0 && k <= 6) {
        const FactsReport f = verify_facts(k, r, cell_seed);
        const bool monomials_ok = f.monomials == f.monomials_closed;
        const bool degree_ok = f.degrees_uniform && f.degree == f.degree_closed;
        const bool group_ok = f.group_size == f.group_size_closed;
        rows.push_back({"monomials", k, r, 0, static_cast<double>(f.monomials),
                        static_cast<double>(f.monomials_closed), monomials_ok});
        rows.push_back({"degree", k, r, 0, f.log_product, f.log_product_closed,
                        degree_ok && f.holds});
        rows.push_back({"group_size", k, r, 0, static_cast<double>(f.group_size),
                        static_cast<double>(f.group_size_closed), group_ok});
      }
    }
  }
  return emit(cfg.format, lemma_csv(rows), json(rows));
}

std::string run_sweep(const RunConfig& cfg) {
  FamilySequenceSpec spec = *cfg.sequence;
  spec.n_grid = cfg.n_grid;
  const TrendReport report = identifiability_verdict(spec);
  return emit(cfg.format, trend_csv(report), json(report));
}

}  // namespace

std::string render(const RunConfig& config) {
  if (!config.command) throw ConfigError("no command given");
  validate_config(config);
  switch (*config.command) {
    case Command::kBounds:
      return run_bounds(config);
    case Command::kSimulate:
      return run_simulate(config);
    case Command::kLemma:
      return run_lemma(config);
    case Command::kExponent:
      return run_exponent(config);
    case Command::kSweep:
      return run_sweep(config);
  }
  throw ConfigError("unhandled command");
}

int run(const RunConfig& config, std::ostream& fallback, std::ostream& diag) {
  try {
    const std::string text = render(config);
    if (config.out.empty()) {
      fallback << text;
      fallback.flush();
      if (!fallback) throw IoError("failed writing to standard output");
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) throw IoError("cannot open '" + config.out + "' for writing");
      file << text;
      file.close();
      if (!file) throw IoError("failed writing '" + config.out + "'");
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    diag << "distid: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const PreconditionError& e) {
    diag << "distid: precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const IoError& e) {
    diag << "distid: I/O error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace distid
