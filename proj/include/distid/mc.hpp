#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "distid/decoder.hpp"
#include "distid/family.hpp"
#include "distid/rng.hpp"

namespace distid {

/// Monte Carlo estimate of the identification error probability at one n.
struct McEstimate {
  std::uint64_t n = 0;
  std::uint64_t A = 0;
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  double p_hat = 0.0;
  double stderr_ = 0.0;
  /// True when no error was observed and stderr_ is the 1/trials placeholder.
  bool stderr_placeholder = false;
  /// Misassigned-index count r -> number of error trials with that r.
  std::map<std::uint64_t, std::uint64_t> r_histogram;
  std::uint64_t single_cycle_errors = 0;
  double single_cycle_fraction = 0.0;

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

/// Nontrivial cycles of `perm`, each rotated to start at its smallest element
/// and ordered by that element. Fixed points are omitted.
std::vector<std::vector<std::size_t>> permutation_cycle_decomposition(const Permutation& perm);

/// Error probability with the true assignment fixed to the identity. Trial t
/// draws row i with seed derive_seed(derive_seed(seed, t), i), so the result is
/// the same for every `workers` value.
McEstimate estimate_error_prob(const DistributionFamily& family, std::uint64_t n,
                               std::uint64_t trials, Seed seed, int workers = 1);

/// Single-threaded reference for estimate_error_prob.
McEstimate estimate_error_prob_serial(const DistributionFamily& family, std::uint64_t n,
                                      std::uint64_t trials, Seed seed);

/// Decay-rate fit of the pairwise swap event against its 2B target.
struct ExponentFit {
  std::vector<std::uint64_t> n_grid;
  std::vector<std::uint64_t> errors;
  std::vector<double> p_hats;
  std::vector<bool> used;  ///< point had enough errors to enter the fit
  std::uint64_t trials = 0;
  double slope = 0.0;
  double target = 0.0;  ///< 2 B(p, q)

  double relative_error() const { return (slope - target) / target; }
  friend bool operator==(const ExponentFit&, const ExponentFit&) = default;
};

/// Points with fewer errors than this are left out of the slope fit.
inline constexpr std::uint64_t kMinFitErrors = 50;

/// Probability estimate of {log p/q (X_2) + log q/p (X_1) >= 0} with X_1 ~ p,
/// X_2 ~ q at each n, then the least-squares slope of -ln p_hat against n.
ExponentFit pairwise_error_exponent(const FinitePmf& p, const FinitePmf& q,
                                    const std::vector<std::uint64_t>& n_grid,
                                    std::uint64_t trials, Seed seed, int workers = 1);

/// Swap-event count at one n; exposed for the serial/parallel benchmark.
std::uint64_t count_swap_events(const FinitePmf& p, const FinitePmf& q, std::uint64_t n,
                                std::uint64_t trials, Seed seed, int workers);
std::uint64_t count_swap_events_serial(const FinitePmf& p, const FinitePmf& q, std::uint64_t n,
                                       std::uint64_t trials, Seed seed);

}  // namespace distid
