#include "distid/pmf.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "distid/errors.hpp"

namespace distid {
namespace {

void require_same_alphabet(const FinitePmf& p, const FinitePmf& q, const char* op) {
  if (p.alphabet_size() != q.alphabet_size()) {
    throw PreconditionError(std::string(op) + ": alphabet sizes differ (" +
                            std::to_string(p.alphabet_size()) + " vs " +
                            std::to_string(q.alphabet_size()) + ")");
  }
}

}  // namespace

FinitePmf::FinitePmf(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) throw PreconditionError("FinitePmf: alphabet size must be at least 2");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw PreconditionError("FinitePmf: entries must be finite and nonnegative");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw PreconditionError("FinitePmf: entries sum to " + std::to_string(total) + ", not 1");
  }
}

double FinitePmf::sup_distance(const FinitePmf& other) const {
  require_same_alphabet(*this, other, "sup_distance");
  double worst = 0.0;
  for (std::size_t x = 0; x < probs_.size(); ++x) {
    worst = std::max(worst, std::abs(probs_[x] - other.probs_[x]));
  }
  return worst;
}

double bhattacharyya_coefficient(const FinitePmf& p, const FinitePmf& q) {
  require_same_alphabet(p, q, "bhattacharyya");
  double coeff = 0.0;
  for (std::size_t x = 0; x < p.alphabet_size(); ++x) {
    // sqrt(a*b) is commutative in IEEE arithmetic, so the result is symmetric.
    coeff += std::sqrt(p[x] * q[x]);
  }
  return coeff;
}

double bhattacharyya(const FinitePmf& p, const FinitePmf& q) {
  if (p == q) return 0.0;
  const double coeff = bhattacharyya_coefficient(p, q);
  if (coeff <= 0.0) return std::numeric_limits<double>::infinity();
  // Rounding can push the coefficient a hair above 1 for p == q.
  return coeff >= 1.0 ? 0.0 : -std::log(coeff);
}

double kl_divergence(const FinitePmf& p, const FinitePmf& q) {
  require_same_alphabet(p, q, "kl_divergence");
  double total = 0.0;
  for (std::size_t x = 0; x < p.alphabet_size(); ++x) {
    if (p[x] == 0.0) continue;
    if (q[x] == 0.0) return std::numeric_limits<double>::infinity();
    total += p[x] * std::log(p[x] / q[x]);
  }
  return total;
}

FinitePmf tilted_midpoint(const FinitePmf& p, const FinitePmf& q) {
  require_same_alphabet(p, q, "tilted_midpoint");
  std::vector<double> geo(p.alphabet_size());
  double norm = 0.0;
  for (std::size_t x = 0; x < geo.size(); ++x) {
    geo[x] = std::sqrt(p[x] * q[x]);
    norm += geo[x];
  }
  if (norm <= 0.0) throw PreconditionError("tilted_midpoint: supports are disjoint");
  double total = 0.0;
  for (double& g : geo) {
    g /= norm;
    total += g;
  }
  // One renormalization pass keeps the sum within the FinitePmf tolerance.
  for (double& g : geo) g /= total;
  return FinitePmf(std::move(geo));
}

}  // namespace distid
