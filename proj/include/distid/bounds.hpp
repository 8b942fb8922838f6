#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "distid/family.hpp"

namespace distid {

/// Criterion sum S = sum_{i<j} exp(-2 n B(P_i, P_j)) and its natural log.
struct PairSum {
  double S = 0.0;
  double log_S = 0.0;
};

/// Pairwise Bhattacharyya distances, packed in lexicographic (i<j) order.
/// OpenMP-parallel over pairs; each entry is computed independently so the
/// result equals the serial version bit for bit.
std::vector<double> pairwise_bhattacharyya(const DistributionFamily& family);
std::vector<double> pairwise_bhattacharyya_serial(const DistributionFamily& family);

/// S evaluated in the log domain; pairs at infinite distance contribute 0.
PairSum pairwise_sum_S(const DistributionFamily& family, std::uint64_t n);

/// Union-bound error probability 16 S / (1 - 4 sqrt(S)), clamped to 1.
struct UpperBound {
  std::optional<double> value;  ///< empty when 4 sqrt(S) >= 1
  bool clamped = false;

  bool applicable() const noexcept { return value.has_value(); }
};

UpperBound upper_bound(double S);

/// Converse bound sqrt(S) / (8 + sqrt(S)).
double lower_bound(double S);

/// Sum of cycle gains over all cycles of length 2..r_max in K_A with edge
/// weights exp(-n B(P_i, P_j)); a 2-cycle squares its edge. Returned as
/// (value, log value). A <= 9, 2 <= r_max <= A.
PairSum cycle_sum_bound(const DistributionFamily& family, std::uint64_t n, std::size_t r_max);

/// N_{r,k} / (n_k)^{r/2} with N_{r,k} = C(k,r)(r-1)!/2 and n_k = C(k,2).
double count_ratio(std::uint64_t k, std::uint64_t r);

/// Exact test of count_ratio(k, r) <= 4^r in integer arithmetic
/// (compares (2N)^2 against 4 * 16^r * n_k^r).
bool count_ratio_within_four_pow(std::uint64_t k, std::uint64_t r);

struct BoundReport {
  std::uint64_t n = 0;
  std::uint64_t A = 0;
  double S = 0.0;
  double log_S = 0.0;
  UpperBound upper;
  double lower = 0.0;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

inline bool operator==(const UpperBound& a, const UpperBound& b) {
  return a.value == b.value && a.clamped == b.clamped;
}

BoundReport make_bound_report(const DistributionFamily& family, std::uint64_t n);
BoundReport make_bound_report(std::uint64_t n, std::uint64_t A, const PairSum& sum);

// ---- identifiability trend along a sequence of families -------------------

struct GrowthRule {
  enum class Kind { kConstant, kPolynomial, kExponential };
  Kind kind = Kind::kConstant;
  std::uint64_t size = 2;  ///< constant
  double degree = 1.0;     ///< polynomial: ceil(n^degree)
  double rate = 0.0;       ///< exponential: ceil(exp(rate * n))

  /// A_n as a real number (may exceed the 64-bit range for exponential growth).
  double size_at(std::uint64_t n) const;
};

struct FamilySequenceSpec {
  GrowthRule growth;
  FamilySpec generator;  ///< size field is replaced by A_n
  std::vector<std::uint64_t> n_grid;
  /// Pairs evaluated per grid point; beyond this, S is estimated from a
  /// seeded uniform sample of this many pairs.
  std::uint64_t pair_budget = 10000;
  Seed seed = kDefaultSeed;
};

enum class Verdict { kIdentifiableTrend, kNotIdentifiableTrend, kInconclusive };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct TrendPoint {
  std::uint64_t n = 0;
  double A = 0.0;
  double log_S = 0.0;
  std::uint64_t pairs_evaluated = 0;
  bool sampled = false;

  friend bool operator==(const TrendPoint&, const TrendPoint&) = default;
};

struct TrendReport {
  std::vector<TrendPoint> points;
  double slope = 0.0;  ///< least-squares slope of log_S vs n over the tail window
  std::size_t window = 0;
  Verdict verdict = Verdict::kInconclusive;

  friend bool operator==(const TrendReport&, const TrendReport&) = default;
};

/// Slope threshold separating the verdicts.
inline constexpr double kTrendSlopeThreshold = 1e-6;

void validate_sequence_spec(const FamilySequenceSpec& spec);

/// log S at one grid point, exact or sampled per the pair budget.
TrendPoint trend_point(const FamilySequenceSpec& spec, std::uint64_t n);

TrendReport identifiability_verdict(const FamilySequenceSpec& spec);

}  // namespace distid
