#include "distid/mc.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "distid/errors.hpp"
#include "distid/numeric.hpp"
#include "distid/sampling.hpp"

namespace distid {
namespace {

// Per-thread scratch for one identification trial.
class TrialKernel {
 public:
  TrialKernel(const DistributionFamily& family, std::uint64_t n) : family_(family), n_(n) {
    samplers_.reserve(family.size());
    for (const auto& p : family.members()) samplers_.emplace_back(p);
    counts_.resize(family.size() * family.alphabet_size());
  }

  // Returns the decoded permutation for trial seed `trial_seed`.
  Permutation run(Seed trial_seed) {
    std::fill(counts_.begin(), counts_.end(), 0U);
    const std::size_t m = family_.alphabet_size();
    for (std::size_t i = 0; i < family_.size(); ++i) {
      samplers_[i].accumulate_counts(derive_seed(trial_seed, i), n_,
                                     std::span<std::uint32_t>(counts_).subspan(i * m, m));
    }
    return ml_decode(log_likelihood_from_counts(counts_, family_.size(), family_));
  }

 private:
  const DistributionFamily& family_;
  std::uint64_t n_;
  std::vector<InverseCdfSampler> samplers_;
  std::vector<std::uint32_t> counts_;
};

struct Tally {
  std::uint64_t errors = 0;
  std::uint64_t single_cycle = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;

  void record(const Permutation& perm) {
    std::uint64_t misassigned = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) misassigned += perm[i] != i ? 1 : 0;
    if (misassigned == 0) return;
    ++errors;
    ++histogram[misassigned];
    if (permutation_cycle_decomposition(perm).size() == 1) ++single_cycle;
  }

  void merge(const Tally& other) {
    errors += other.errors;
    single_cycle += other.single_cycle;
    for (const auto& [r, c] : other.histogram) histogram[r] += c;
  }
};

McEstimate finish(const DistributionFamily& family, std::uint64_t n, std::uint64_t trials,
                  const Tally& tally) {
  McEstimate est;
  est.n = n;
  est.A = family.size();
  est.trials = trials;
  est.errors = tally.errors;
  est.p_hat = static_cast<double>(tally.errors) / static_cast<double>(trials);
  if (tally.errors == 0) {
    est.stderr_ = 1.0 / static_cast<double>(trials);
    est.stderr_placeholder = true;
  } else {
    est.stderr_ = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
  }
  est.r_histogram = tally.histogram;
  est.single_cycle_errors = tally.single_cycle;
  est.single_cycle_fraction =
      tally.errors == 0 ? 0.0
                        : static_cast<double>(tally.single_cycle) / static_cast<double>(tally.errors);
  return est;
}

void check_mc_args(std::uint64_t n, std::uint64_t trials) {
  if (n == 0) throw PreconditionError("estimate_error_prob: n must be >= 1");
  if (trials == 0) throw PreconditionError("estimate_error_prob: trials must be >= 1");
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw PreconditionError("estimate_error_prob: n too large");
  }
}

// Per-symbol log(q/p); the swap statistic is sum_x (c1(x) - c2(x)) * llr(x).
std::vector<double> swap_llr(const FinitePmf& p, const FinitePmf& q) {
  std::vector<double> llr(p.alphabet_size());
  for (std::size_t x = 0; x < llr.size(); ++x) llr[x] = std::log(q[x]) - std::log(p[x]);
  return llr;
}

bool swap_event(const InverseCdfSampler& sp, const InverseCdfSampler& sq,
                const std::vector<double>& llr, std::uint64_t n, Seed trial_seed,
                std::vector<std::uint32_t>& c1, std::vector<std::uint32_t>& c2) {
  std::fill(c1.begin(), c1.end(), 0U);
  std::fill(c2.begin(), c2.end(), 0U);
  sp.accumulate_counts(derive_seed(trial_seed, 0), n, c1);
  sq.accumulate_counts(derive_seed(trial_seed, 1), n, c2);
  double statistic = 0.0;
  for (std::size_t x = 0; x < llr.size(); ++x) {
    const auto diff = static_cast<std::int64_t>(c1[x]) - static_cast<std::int64_t>(c2[x]);
    // Equal counts contribute exactly zero, so tied type pairs give statistic 0.
    if (diff != 0) statistic += static_cast<double>(diff) * llr[x];
  }
  return statistic >= 0.0;
}

}  // namespace

std::vector<std::vector<std::size_t>> permutation_cycle_decomposition(const Permutation& perm) {
  if (!is_permutation(perm)) throw PreconditionError("permutation_cycle_decomposition: not a permutation");
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t v = start; !seen[v]; v = perm[v]) {
      seen[v] = 1;
      cycle.push_back(v);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

McEstimate estimate_error_prob_serial(const DistributionFamily& family, std::uint64_t n,
                                      std::uint64_t trials, Seed seed) {
  check_mc_args(n, trials);
  TrialKernel kernel(family, n);
  Tally tally;
  for (std::uint64_t t = 0; t < trials; ++t) tally.record(kernel.run(derive_seed(seed, t)));
  return finish(family, n, trials, tally);
}

McEstimate estimate_error_prob(const DistributionFamily& family, std::uint64_t n,
                               std::uint64_t trials, Seed seed, int workers) {
  check_mc_args(n, trials);
  if (workers < 1) throw PreconditionError("estimate_error_prob: workers must be >= 1");
  Tally total;
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel num_threads(workers)
  {
    TrialKernel kernel(family, n);
    Tally local;
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < count; ++t) {
      local.record(kernel.run(derive_seed(seed, static_cast<std::uint64_t>(t))));
    }
#pragma omp critical(distid_mc_merge)
    total.merge(local);
  }
  return finish(family, n, trials, total);
}

std::uint64_t count_swap_events_serial(const FinitePmf& p, const FinitePmf& q, std::uint64_t n,
                                       std::uint64_t trials, Seed seed) {
  const InverseCdfSampler sp(p);
  const InverseCdfSampler sq(q);
  const auto llr = swap_llr(p, q);
  std::vector<std::uint32_t> c1(p.alphabet_size());
  std::vector<std::uint32_t> c2(p.alphabet_size());
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    hits += swap_event(sp, sq, llr, n, derive_seed(seed, t), c1, c2) ? 1 : 0;
  }
  return hits;
}

std::uint64_t count_swap_events(const FinitePmf& p, const FinitePmf& q, std::uint64_t n,
                                std::uint64_t trials, Seed seed, int workers) {
  if (workers < 1) throw PreconditionError("pairwise_error_exponent: workers must be >= 1");
  const InverseCdfSampler sp(p);
  const InverseCdfSampler sq(q);
  const auto llr = swap_llr(p, q);
  std::uint64_t hits = 0;
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel num_threads(workers) reduction(+ : hits)
  {
    std::vector<std::uint32_t> c1(p.alphabet_size());
    std::vector<std::uint32_t> c2(p.alphabet_size());
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < count; ++t) {
      hits += swap_event(sp, sq, llr, n, derive_seed(seed, static_cast<std::uint64_t>(t)), c1, c2)
                  ? 1
                  : 0;
    }
  }
  return hits;
}

ExponentFit pairwise_error_exponent(const FinitePmf& p, const FinitePmf& q,
                                    const std::vector<std::uint64_t>& n_grid,
                                    std::uint64_t trials, Seed seed, int workers) {
  const double distance = bhattacharyya(p, q);
  if (!(distance > 0.0) || std::isinf(distance)) {
    throw PreconditionError("pairwise_error_exponent: need 0 < B(p, q) < inf");
  }
  if (n_grid.size() < 3) throw PreconditionError("pairwise_error_exponent: n_grid needs >= 3 points");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] == 0 || (i > 0 && n_grid[i] <= n_grid[i - 1])) {
      throw PreconditionError("pairwise_error_exponent: n_grid must be positive and strictly increasing");
    }
  }
  if (trials == 0) throw PreconditionError("pairwise_error_exponent: trials must be >= 1");

  ExponentFit fit;
  fit.n_grid = n_grid;
  fit.trials = trials;
  fit.target = 2.0 * distance;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::uint64_t n : n_grid) {
    const std::uint64_t hits = count_swap_events(p, q, n, trials, derive_seed(seed, n), workers);
    const double p_hat = static_cast<double>(hits) / static_cast<double>(trials);
    const bool use = hits >= kMinFitErrors;
    fit.errors.push_back(hits);
    fit.p_hats.push_back(p_hat);
    fit.used.push_back(use);
    if (use) {
      xs.push_back(static_cast<double>(n));
      ys.push_back(-std::log(p_hat));
    }
  }
  if (xs.size() < 2) {
    throw PreconditionError("pairwise_error_exponent: fewer than two grid points reached " +
                            std::to_string(kMinFitErrors) + " errors; raise trials");
  }
  fit.slope = least_squares_slope(xs, ys);
  return fit;
}

}  // namespace distid
