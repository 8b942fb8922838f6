#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "distid/family.hpp"
#include "distid/sampling.hpp"

namespace distid {

/// Square A x A score matrix; entry(i, j) is the log-likelihood of sequence i
/// under distribution j. -inf marks an impossible assignment; NaN is rejected.
class LogLikelihoodMatrix {
 public:
  LogLikelihoodMatrix(std::size_t size, std::vector<double> entries);

  std::size_t size() const noexcept { return size_; }
  double operator()(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(entries_).subspan(i * size_, size_);
  }
  std::span<const double> entries() const noexcept { return entries_; }

 private:
  std::size_t size_;
  std::vector<double> entries_;
};

/// mapping[i] is the distribution index assigned to sequence i.
using Permutation = std::vector<std::size_t>;

bool is_permutation(std::span<const std::size_t> mapping);

/// Sum over rows, in row order, of entry(i, mapping[i]).
double assignment_score(const LogLikelihoodMatrix& matrix, std::span<const std::size_t> mapping);

/// Score matrix from per-row symbol counts: entry(i, j) = sum_x count_i(x) log P_j(x).
/// Terms with zero count are skipped, so -inf appears exactly when row i uses a
/// symbol outside the support of P_j.
LogLikelihoodMatrix log_likelihood_from_counts(std::span<const std::uint32_t> counts,
                                               std::size_t rows, const DistributionFamily& family);

LogLikelihoodMatrix log_likelihood_matrix(const ObservationBatch& batch,
                                          const DistributionFamily& family);

/// Maximum-likelihood assignment via an O(A^3) shortest-augmenting-path
/// solver. Among optimal assignments the lexicographically smallest mapping is
/// returned. Throws InfeasibleAssignment if every assignment scores -inf.
Permutation ml_decode(const LogLikelihoodMatrix& matrix);

/// Literal enumeration over all A! mappings in lexicographic order, keeping
/// the first strict maximum. A <= 10.
Permutation exhaustive_decode(const LogLikelihoodMatrix& matrix);

}  // namespace distid
