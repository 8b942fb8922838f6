#include "distid/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "distid/errors.hpp"

namespace distid {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Minimum-cost perfect matching (Hungarian method with potentials).
// Returns row -> column and leaves the dual potentials in `row_pot`/`col_pot`
// such that cost(i, j) - row_pot[i] - col_pot[j] >= 0 with equality on the matching.
std::vector<std::size_t> min_cost_assignment(const std::vector<double>& cost, std::size_t n,
                                             std::vector<double>& row_pot,
                                             std::vector<double>& col_pot) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based internally; index 0 is the virtual source column.
  std::vector<double> u(n + 1, 0.0);
  std::vector<double> v(n + 1, 0.0);
  std::vector<std::size_t> match_of_col(n + 1, 0);
  std::vector<std::size_t> way(n + 1, 0);
  std::vector<double> min_slack(n + 1);
  std::vector<char> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    match_of_col[0] = i;
    std::size_t col0 = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col0] = 1;
      const std::size_t row0 = match_of_col[col0];
      double delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = cost[(row0 - 1) * n + (j - 1)] - u[row0] - v[j];
        if (reduced < min_slack[j]) {
          min_slack[j] = reduced;
          way[j] = col0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          col1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      col0 = col1;
    } while (match_of_col[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match_of_col[col0] = match_of_col[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[match_of_col[j] - 1] = j - 1;
  row_pot.assign(u.begin() + 1, u.end());
  col_pot.assign(v.begin() + 1, v.end());
  return assignment;
}

// Kuhn-style search for an alternating path in the tight-edge graph from
// `row` to column `target`, using only rows in [first_free_row, n).
bool reroute(std::size_t row, std::size_t target, std::size_t first_free_row,
             const std::vector<char>& tight, std::size_t n, std::vector<std::size_t>& row_to_col,
             std::vector<std::size_t>& col_to_row, std::vector<char>& visited_col,
             std::size_t banned_col) {
  for (std::size_t c = 0; c < n; ++c) {
    if (!tight[row * n + c] || visited_col[c] || c == banned_col) continue;
    visited_col[c] = 1;
    const std::size_t owner = col_to_row[c];
    if (c == target || (owner != kNone && owner >= first_free_row &&
                        reroute(owner, target, first_free_row, tight, n, row_to_col, col_to_row,
                                visited_col, banned_col))) {
      row_to_col[row] = c;
      col_to_row[c] = row;
      return true;
    }
  }
  return false;
}

}  // namespace

LogLikelihoodMatrix::LogLikelihoodMatrix(std::size_t size, std::vector<double> entries)
    : size_(size), entries_(std::move(entries)) {
  if (size_ < 2) throw PreconditionError("LogLikelihoodMatrix: size must be >= 2");
  if (entries_.size() != size_ * size_) {
    throw PreconditionError("LogLikelihoodMatrix: expected " + std::to_string(size_ * size_) +
                            " entries, got " + std::to_string(entries_.size()));
  }
  for (double e : entries_) {
    if (std::isnan(e)) throw PreconditionError("LogLikelihoodMatrix: NaN entry");
    if (e == std::numeric_limits<double>::infinity()) {
      throw PreconditionError("LogLikelihoodMatrix: +inf entry");
    }
  }
}

bool is_permutation(std::span<const std::size_t> mapping) {
  std::vector<char> seen(mapping.size(), 0);
  for (std::size_t v : mapping) {
    if (v >= mapping.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

double assignment_score(const LogLikelihoodMatrix& matrix, std::span<const std::size_t> mapping) {
  double score = 0.0;
  for (std::size_t i = 0; i < mapping.size(); ++i) score += matrix(i, mapping[i]);
  return score;
}

LogLikelihoodMatrix log_likelihood_from_counts(std::span<const std::uint32_t> counts,
                                               std::size_t rows, const DistributionFamily& family) {
  const std::size_t m = family.alphabet_size();
  if (rows != family.size()) {
    throw PreconditionError("log_likelihood_matrix: batch has " + std::to_string(rows) +
                            " rows but family has " + std::to_string(family.size()) + " members");
  }
  if (counts.size() != rows * m) throw PreconditionError("log_likelihood_matrix: bad count table");
  std::vector<double> log_probs(rows * m);
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t x = 0; x < m; ++x) log_probs[j * m + x] = std::log(family[j][x]);
  }
  std::vector<double> entries(rows * rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row_counts = counts.subspan(i * m, m);
    for (std::size_t j = 0; j < rows; ++j) {
      double total = 0.0;
      for (std::size_t x = 0; x < m; ++x) {
        if (row_counts[x] != 0) total += static_cast<double>(row_counts[x]) * log_probs[j * m + x];
      }
      entries[i * rows + j] = total;
    }
  }
  return LogLikelihoodMatrix(rows, std::move(entries));
}

LogLikelihoodMatrix log_likelihood_matrix(const ObservationBatch& batch,
                                          const DistributionFamily& family) {
  const std::size_t m = family.alphabet_size();
  if (batch.rows() != family.size()) {
    throw PreconditionError("log_likelihood_matrix: batch has " + std::to_string(batch.rows()) +
                            " rows but family has " + std::to_string(family.size()) + " members");
  }
  std::vector<std::uint32_t> counts(batch.rows() * m, 0);
  for (std::size_t i = 0; i < batch.rows(); ++i) {
    for (Symbol s : batch.row(i)) {
      if (s >= m) throw PreconditionError("log_likelihood_matrix: symbol outside alphabet");
      ++counts[i * m + s];
    }
  }
  return log_likelihood_from_counts(counts, batch.rows(), family);
}

Permutation ml_decode(const LogLikelihoodMatrix& matrix) {
  const std::size_t n = matrix.size();
  double best_finite = kNegInf;
  double worst_finite = std::numeric_limits<double>::infinity();
  for (double e : matrix.entries()) {
    if (e == kNegInf) continue;
    best_finite = std::max(best_finite, e);
    worst_finite = std::min(worst_finite, e);
  }
  if (best_finite == kNegInf) throw InfeasibleAssignment("ml_decode: every entry is -inf");

  // Shift to nonnegative costs; forbidden edges cost more than any finite
  // assignment can, so they are used only when nothing finite exists.
  const double range = best_finite - worst_finite;
  const double forbidden = static_cast<double>(n) * range + 1.0;
  std::vector<double> cost(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const double e = matrix.entries()[k];
    cost[k] = e == kNegInf ? forbidden : best_finite - e;
  }

  std::vector<double> row_pot;
  std::vector<double> col_pot;
  std::vector<std::size_t> row_to_col = min_cost_assignment(cost, n, row_pot, col_pot);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix(i, row_to_col[i]) == kNegInf) {
      throw InfeasibleAssignment("ml_decode: no assignment with finite score");
    }
  }

  // Every optimal assignment lives on zero-reduced-cost edges. Walk rows in
  // order and move each to its smallest tight column that still admits a
  // perfect tight matching on the remaining rows.
  const double tolerance = 1e-10 * static_cast<double>(n) * (range + 1.0);
  std::vector<char> tight(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double e = matrix(i, j);
      tight[i * n + j] = e != kNegInf && cost[i * n + j] - row_pot[i] - col_pot[j] <= tolerance;
    }
  }
  std::vector<std::size_t> col_to_row(n);
  for (std::size_t i = 0; i < n; ++i) col_to_row[row_to_col[i]] = i;
  std::vector<char> visited(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < row_to_col[i]; ++j) {
      if (!tight[i * n + j] || col_to_row[j] < i) continue;
      // Column j is held by a later row; try to hand that row's path over to
      // the column i releases.
      const std::size_t released = row_to_col[i];
      const std::size_t holder = col_to_row[j];
      std::fill(visited.begin(), visited.end(), 0);
      auto trial_rows = row_to_col;
      auto trial_cols = col_to_row;
      if (reroute(holder, released, i + 1, tight, n, trial_rows, trial_cols, visited, j)) {
        trial_rows[i] = j;
        trial_cols[j] = i;
        row_to_col = std::move(trial_rows);
        col_to_row = std::move(trial_cols);
        break;
      }
    }
  }
  return row_to_col;
}

Permutation exhaustive_decode(const LogLikelihoodMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n > 10) throw PreconditionError("exhaustive_decode: size " + std::to_string(n) + " > 10");
  Permutation current(n);
  std::iota(current.begin(), current.end(), std::size_t{0});
  Permutation best;
  double best_score = kNegInf;
  do {
    const double score = assignment_score(matrix, current);
    if (score > best_score) {
      best_score = score;
      best = current;
    }
  } while (std::next_permutation(current.begin(), current.end()));
  if (best.empty()) throw InfeasibleAssignment("exhaustive_decode: no assignment with finite score");
  return best;
}

}  // namespace distid
