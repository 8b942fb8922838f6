#include "distid/family.hpp"

#include <cmath>
#include <string>

#include "distid/errors.hpp"

namespace distid {

DistributionFamily::DistributionFamily(std::vector<FinitePmf> members)
    : members_(std::move(members)) {
  if (members_.size() < 2) throw PreconditionError("family needs at least 2 members");
  const std::size_t m = members_.front().alphabet_size();
  for (const auto& p : members_) {
    if (p.alphabet_size() != m) throw PreconditionError("family members differ in alphabet size");
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      if (members_[i].sup_distance(members_[j]) <= kDistinctTolerance) {
        throw PreconditionError("family members " + std::to_string(i) + " and " +
                                std::to_string(j) + " are not distinct");
      }
    }
  }
}

namespace {

struct Validator {
  void operator()(const ExplicitFamily& f) const {
    if (f.members.size() < 2) throw PreconditionError("explicit family needs at least 2 members");
  }
  void operator()(const BinaryGrid& g) const {
    if (!(g.theta_min >= 0.0 && g.theta_max <= 1.0 && g.theta_min < g.theta_max)) {
      throw PreconditionError("binary-grid requires 0 <= theta_min < theta_max <= 1");
    }
    if (g.size < 2) throw PreconditionError("binary-grid needs size >= 2");
  }
  void operator()(const RandomSimplex& r) const {
    if (r.alphabet < 2) throw PreconditionError("random-simplex needs alphabet >= 2");
    if (r.size < 2) throw PreconditionError("random-simplex needs size >= 2");
  }
};

FinitePmf grid_member(const BinaryGrid& g, std::uint64_t index) {
  double theta = g.theta_max;
  if (index + 1 < g.size) {
    theta = g.theta_min + (g.theta_max - g.theta_min) * static_cast<double>(index) /
                              static_cast<double>(g.size - 1);
  }
  return FinitePmf({theta, 1.0 - theta});
}

FinitePmf simplex_member(const RandomSimplex& r, std::uint64_t index) {
  CounterStream stream(derive_seed(r.seed, index));
  std::vector<double> weights(r.alphabet);
  double total = 0.0;
  for (double& w : weights) {
    // Offset by half an ulp of the 53-bit grid so the log argument is never 0.
    const double u = (static_cast<double>(stream.next_u64() >> 11) + 0.5) * 0x1.0p-53;
    w = -std::log(u);
    total += w;
  }
  for (double& w : weights) w /= total;
  return FinitePmf(std::move(weights));
}

}  // namespace

void validate_family_spec(const FamilySpec& spec) { std::visit(Validator{}, spec); }

std::uint64_t family_size(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::uint64_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, ExplicitFamily>) {
          return s.members.size();
        } else {
          return s.size;
        }
      },
      spec);
}

FamilySpec resize_family(const FamilySpec& spec, std::uint64_t size) {
  return std::visit(
      [size](auto s) -> FamilySpec {
        if constexpr (std::is_same_v<decltype(s), ExplicitFamily>) {
          if (size > s.members.size()) {
            throw PreconditionError("explicit family has only " +
                                    std::to_string(s.members.size()) + " members, " +
                                    std::to_string(size) + " requested");
          }
          s.members.resize(size);
        } else {
          s.size = size;
        }
        return s;
      },
      spec);
}

FinitePmf family_member(const FamilySpec& spec, std::uint64_t index) {
  if (index >= family_size(spec)) throw PreconditionError("family member index out of range");
  return std::visit(
      [index](const auto& s) -> FinitePmf {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ExplicitFamily>) {
          return FinitePmf(s.members[index]);
        } else if constexpr (std::is_same_v<T, BinaryGrid>) {
          return grid_member(s, index);
        } else {
          return simplex_member(s, index);
        }
      },
      spec);
}

DistributionFamily make_family(const FamilySpec& spec) {
  validate_family_spec(spec);
  const std::uint64_t size = family_size(spec);
  std::vector<FinitePmf> members;
  members.reserve(size);
  for (std::uint64_t i = 0; i < size; ++i) members.push_back(family_member(spec, i));
  return DistributionFamily(std::move(members));
}

}  // namespace distid
