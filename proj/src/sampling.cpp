#include "distid/sampling.hpp"

#include <algorithm>

#include "distid/errors.hpp"

namespace distid {

ObservationBatch::ObservationBatch(std::size_t rows, std::size_t length, std::vector<Symbol> symbols)
    : rows_(rows), length_(length), symbols_(std::move(symbols)) {
  if (length_ == 0) throw PreconditionError("ObservationBatch: sequence length must be >= 1");
  if (symbols_.size() != rows_ * length_) {
    throw PreconditionError("ObservationBatch: symbol count does not match rows x length");
  }
}

InverseCdfSampler::InverseCdfSampler(const FinitePmf& p) : cdf_(p.alphabet_size()) {
  double running = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t x = 0; x < cdf_.size(); ++x) {
    running += p[x];
    cdf_[x] = running;
    if (p[x] > 0.0) last_positive = x;
  }
  // Pin the tail to exactly 1 so every u in [0,1) lands on a supported symbol.
  std::fill(cdf_.begin() + static_cast<std::ptrdiff_t>(last_positive), cdf_.end(), 1.0);
}

Symbol InverseCdfSampler::draw(CounterStream& stream) const {
  const double u = stream.next_unit();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return static_cast<Symbol>(it - cdf_.begin());
}

void InverseCdfSampler::fill(Seed seed, std::span<Symbol> out) const {
  CounterStream stream(seed);
  for (auto& s : out) s = draw(stream);
}

void InverseCdfSampler::accumulate_counts(Seed seed, std::size_t length,
                                          std::span<std::uint32_t> counts) const {
  CounterStream stream(seed);
  if (cdf_.size() == 2) {
    // Binary fast path: symbol 0 iff u < cdf[0].
    const double threshold = cdf_[0];
    std::uint32_t zeros = 0;
    for (std::size_t t = 0; t < length; ++t) zeros += stream.next_unit() < threshold ? 1U : 0U;
    counts[0] += zeros;
    counts[1] += static_cast<std::uint32_t>(length) - zeros;
    return;
  }
  for (std::size_t t = 0; t < length; ++t) ++counts[draw(stream)];
}

std::vector<Symbol> sample_sequence(const FinitePmf& p, std::size_t n, Seed seed) {
  if (n == 0) throw PreconditionError("sample_sequence: n must be >= 1");
  std::vector<Symbol> out(n);
  InverseCdfSampler(p).fill(seed, out);
  return out;
}

ObservationBatch sample_batch(const DistributionFamily& family, std::size_t n, Seed seed) {
  if (n == 0) throw PreconditionError("sample_batch: n must be >= 1");
  std::vector<Symbol> symbols(family.size() * n);
  for (std::size_t i = 0; i < family.size(); ++i) {
    InverseCdfSampler(family[i]).fill(derive_seed(seed, i),
                                      std::span<Symbol>(symbols).subspan(i * n, n));
  }
  return ObservationBatch(family.size(), n, std::move(symbols));
}

}  // namespace distid
