#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "distid/pmf.hpp"
#include "distid/rng.hpp"

namespace distid {

/// Ordered set of A >= 2 pairwise-distinct pmfs on a common alphabet.
class DistributionFamily {
 public:
  /// Two members closer than this in sup-norm count as duplicates.
  static constexpr double kDistinctTolerance = 1e-9;

  explicit DistributionFamily(std::vector<FinitePmf> members);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t alphabet_size() const noexcept { return members_.front().alphabet_size(); }
  const FinitePmf& operator[](std::size_t i) const { return members_[i]; }
  std::span<const FinitePmf> members() const noexcept { return members_; }

 private:
  std::vector<FinitePmf> members_;
};

/// Members listed one by one.
struct ExplicitFamily {
  std::vector<std::vector<double>> members;
};

/// Binary pmfs (theta_i, 1 - theta_i), theta equally spaced on [theta_min, theta_max].
struct BinaryGrid {
  std::uint64_t size = 2;
  double theta_min = 0.1;
  double theta_max = 0.9;
};

/// Members drawn uniformly from the simplex of dimension `alphabet`
/// (normalized i.i.d. exponential weights). Member i depends only on (seed, i),
/// so growing `size` keeps earlier members fixed.
struct RandomSimplex {
  std::uint64_t size = 2;
  std::size_t alphabet = 2;
  Seed seed = kDefaultSeed;
};

using FamilySpec = std::variant<ExplicitFamily, BinaryGrid, RandomSimplex>;

/// Builds and validates a family. Throws PreconditionError for fewer than two
/// members, duplicates, or invalid generator parameters.
DistributionFamily make_family(const FamilySpec& spec);

/// Number of members `spec` describes.
std::uint64_t family_size(const FamilySpec& spec);

/// Copy of `spec` describing `size` members (explicit lists are truncated and
/// may not grow).
FamilySpec resize_family(const FamilySpec& spec, std::uint64_t size);

/// Member `index` of the family `spec` would produce, without building the rest.
FinitePmf family_member(const FamilySpec& spec, std::uint64_t index);

/// Validates generator parameters that do not depend on size.
void validate_family_spec(const FamilySpec& spec);

}  // namespace distid
