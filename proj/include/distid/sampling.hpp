#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "distid/family.hpp"
#include "distid/pmf.hpp"
#include "distid/rng.hpp"

namespace distid {

using Symbol = std::uint32_t;

/// A rows of n symbols each, row-major. Row i is the sequence observed from
/// source i.
class ObservationBatch {
 public:
  ObservationBatch(std::size_t rows, std::size_t length, std::vector<Symbol> symbols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t length() const noexcept { return length_; }
  std::span<const Symbol> row(std::size_t i) const {
    return std::span<const Symbol>(symbols_).subspan(i * length_, length_);
  }

 private:
  std::size_t rows_;
  std::size_t length_;
  std::vector<Symbol> symbols_;
};

/// Inverse-CDF sampler for one pmf. Cheap to copy; holds the cumulative table.
class InverseCdfSampler {
 public:
  explicit InverseCdfSampler(const FinitePmf& p);

  Symbol draw(CounterStream& stream) const;

  /// Fills `out` with i.i.d. draws from the stream seeded by `seed`.
  void fill(Seed seed, std::span<Symbol> out) const;

  /// Adds the symbol counts of `length` i.i.d. draws to `counts`. Draws the same
  /// symbols that fill() would for the same seed.
  void accumulate_counts(Seed seed, std::size_t length, std::span<std::uint32_t> counts) const;

 private:
  std::vector<double> cdf_;
};

/// Length-n i.i.d. sequence from p, deterministic in (p, n, seed).
std::vector<Symbol> sample_sequence(const FinitePmf& p, std::size_t n, Seed seed);

/// Row i drawn from family[i] with seed derive_seed(seed, i).
ObservationBatch sample_batch(const DistributionFamily& family, std::size_t n, Seed seed);

}  // namespace distid
