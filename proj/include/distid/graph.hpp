#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "distid/rng.hpp"

namespace distid {

/// K_k with one nonnegative weight per unordered pair (i < j), stored in
/// lexicographic pair order.
class WeightedCompleteGraph {
 public:
  WeightedCompleteGraph(std::size_t k, std::vector<double> weights);

  /// All C(k,2) weights equal to `weight`.
  static WeightedCompleteGraph uniform(std::size_t k, double weight);
  /// Weights i.i.d. uniform on [0, 1).
  static WeightedCompleteGraph random(std::size_t k, Seed seed);

  std::size_t vertices() const noexcept { return k_; }
  std::size_t edges() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  double weight(std::size_t u, std::size_t v) const { return weights_[edge_index(k_, u, v)]; }

  /// Position of edge {u, v} (u != v) in lexicographic pair order.
  static std::size_t edge_index(std::size_t k, std::size_t u, std::size_t v);

 private:
  std::size_t k_;
  std::vector<double> weights_;
};

/// Simple cycle as a vertex sequence in canonical form: smallest vertex first,
/// and for r >= 3 the second vertex smaller than the last. A 2-cycle is an
/// unordered pair whose edge is traversed twice.
struct Cycle {
  std::vector<std::size_t> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Number of length-r cycles in K_k: C(k,r)(r-1)!/2 for r >= 3 and C(k,2) for r = 2.
std::uint64_t cycle_count(std::uint64_t k, std::uint64_t r);

/// Every length-r cycle of K_k exactly once, in canonical form and a fixed
/// order (vertex subsets lexicographically, then arrangements
/// lexicographically). 2 <= r <= k <= 10.
std::vector<Cycle> enumerate_cycles(std::size_t k, std::size_t r);

/// Number of length-r cycles through each edge, counting a 2-cycle's edge twice.
std::vector<std::uint64_t> edge_incidence(std::size_t k, std::size_t r);

/// Product of the cycle's edge weights (closing edge included).
double cycle_gain(const WeightedCompleteGraph& graph, const Cycle& cycle);

struct LemmaCheck {
  double lhs = 0.0;  ///< mean cycle gain
  double rhs = 0.0;  ///< (mean squared weight)^(r/2)
  bool holds = false;
};

/// Mean length-r cycle gain against the r/2-th power of the mean squared
/// edge weight. 2 <= r <= k <= 9.
LemmaCheck verify_lemma(const WeightedCompleteGraph& graph, std::size_t r);

/// Counting identities behind the mean-gain inequality for even r, each
/// obtained once by enumeration and once from its closed form.
struct FactsReport {
  std::uint64_t k = 0;
  std::uint64_t r = 0;
  std::uint64_t cycles = 0;            ///< N, by enumeration
  std::uint64_t edges = 0;             ///< n = C(k,2)
  std::uint64_t incidence = 0;         ///< Nr/n
  std::uint64_t monomials = 0;         ///< unit monomials of (Nr/n)(sum a^2)^(r/2), enumerated
  std::uint64_t monomials_closed = 0;  ///< (Nr/n) n^(r/2)
  std::uint64_t degree = 0;            ///< exponent of each a_i in the product of all monomials, enumerated
  std::uint64_t degree_closed = 0;     ///< (Nr/n) r n^(r/2-1)
  std::uint64_t group_size = 0;        ///< monomials / N
  std::uint64_t group_size_closed = 0; ///< r n^(r/2-1)
  double log_product = 0.0;            ///< log of the product of all monomials at random weights
  double log_product_closed = 0.0;     ///< degree_closed * sum_i log a_i at the same weights
  bool degrees_uniform = false;        ///< every edge has the same enumerated degree
  bool holds = false;
};

/// Even r, 2 <= r <= k <= 6. `seed` picks the positive weights for the
/// log-domain product check.
FactsReport verify_facts(std::size_t k, std::size_t r, Seed seed = kDefaultSeed);

}  // namespace distid
