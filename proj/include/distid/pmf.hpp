#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace distid {

/// Probability mass function over the dense alphabet {0, ..., m-1}, m >= 2.
/// Entries are nonnegative and sum to one within 1e-12.
class FinitePmf {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Validates and stores `probs`; throws PreconditionError on violation.
  explicit FinitePmf(std::vector<double> probs);

  std::size_t alphabet_size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t symbol) const { return probs_[symbol]; }

  /// Largest absolute entrywise difference; alphabets must match.
  double sup_distance(const FinitePmf& other) const;

  friend bool operator==(const FinitePmf&, const FinitePmf&) = default;

 private:
  std::vector<double> probs_;
};

/// Bhattacharyya distance -log sum_x sqrt(p(x) q(x)). Returns +inf when the
/// supports are disjoint. Symmetric bit-for-bit.
double bhattacharyya(const FinitePmf& p, const FinitePmf& q);

/// Bhattacharyya coefficient sum_x sqrt(p(x) q(x)).
double bhattacharyya_coefficient(const FinitePmf& p, const FinitePmf& q);

/// Kullback-Leibler divergence D(p || q) over the support of p; +inf if p
/// puts mass where q has none.
double kl_divergence(const FinitePmf& p, const FinitePmf& q);

/// Normalized geometric mean sqrt(p q) / sum sqrt(p q). This is the dominant
/// empirical type of the pairwise swap event. Throws when supports are disjoint.
FinitePmf tilted_midpoint(const FinitePmf& p, const FinitePmf& q);

}  // namespace distid
