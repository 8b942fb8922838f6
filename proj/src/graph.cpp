#include "distid/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "distid/errors.hpp"

namespace distid {
namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  while (exp-- > 0) result *= base;
  return result;
}

void check_range(std::size_t k, std::size_t r, std::size_t k_max, const char* op) {
  if (r < 2 || r > k || k > k_max) {
    throw PreconditionError(std::string(op) + ": need 2 <= r <= k <= " + std::to_string(k_max) +
                            " (got k=" + std::to_string(k) + ", r=" + std::to_string(r) + ")");
  }
}

// Calls visit(exponents) for every composition of `total` into `parts` parts.
template <typename Visit>
void for_each_composition(std::size_t parts, std::uint64_t total, Visit&& visit) {
  std::vector<std::uint64_t> exps(parts, 0);
  auto recurse = [&](auto& self, std::size_t pos, std::uint64_t left) -> void {
    if (pos + 1 == parts) {
      exps[pos] = left;
      visit(exps);
      return;
    }
    for (std::uint64_t e = 0; e <= left; ++e) {
      exps[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  recurse(recurse, 0, total);
}

}  // namespace

WeightedCompleteGraph::WeightedCompleteGraph(std::size_t k, std::vector<double> weights)
    : k_(k), weights_(std::move(weights)) {
  if (k_ < 2) throw PreconditionError("WeightedCompleteGraph: need k >= 2");
  if (weights_.size() != k_ * (k_ - 1) / 2) {
    throw PreconditionError("WeightedCompleteGraph: expected " + std::to_string(k_ * (k_ - 1) / 2) +
                            " weights, got " + std::to_string(weights_.size()));
  }
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw PreconditionError("WeightedCompleteGraph: weights must be finite and nonnegative");
    }
  }
}

WeightedCompleteGraph WeightedCompleteGraph::uniform(std::size_t k, double weight) {
  return WeightedCompleteGraph(k, std::vector<double>(k * (k - 1) / 2, weight));
}

WeightedCompleteGraph WeightedCompleteGraph::random(std::size_t k, Seed seed) {
  CounterStream stream(seed);
  std::vector<double> weights(k * (k - 1) / 2);
  for (double& w : weights) w = stream.next_unit();
  return WeightedCompleteGraph(k, std::move(weights));
}

std::size_t WeightedCompleteGraph::edge_index(std::size_t k, std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return u * k - u * (u + 1) / 2 + (v - u - 1);
}

std::uint64_t cycle_count(std::uint64_t k, std::uint64_t r) {
  if (r < 2 || r > k) return 0;
  if (r == 2) return binomial(k, 2);
  return binomial(k, r) * factorial(r - 1) / 2;
}

std::vector<Cycle> enumerate_cycles(std::size_t k, std::size_t r) {
  check_range(k, r, 10, "enumerate_cycles");
  std::vector<Cycle> cycles;
  cycles.reserve(cycle_count(k, r));
  // Walk r-subsets in lexicographic order via a selection mask.
  std::vector<char> mask(k, 0);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(r), 1);
  std::vector<std::size_t> subset(r);
  do {
    std::size_t pos = 0;
    for (std::size_t v = 0; v < k; ++v) {
      if (mask[v]) subset[pos++] = v;
    }
    // The smallest vertex anchors the rotation; arrange the rest.
    std::vector<std::size_t> rest(subset.begin() + 1, subset.end());
    do {
      if (r == 2 || rest.front() < rest.back()) {
        Cycle c;
        c.vertices.reserve(r);
        c.vertices.push_back(subset.front());
        c.vertices.insert(c.vertices.end(), rest.begin(), rest.end());
        cycles.push_back(std::move(c));
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return cycles;
}

std::vector<std::uint64_t> edge_incidence(std::size_t k, std::size_t r) {
  std::vector<std::uint64_t> counts(k * (k - 1) / 2, 0);
  for (const Cycle& c : enumerate_cycles(k, r)) {
    for (std::size_t t = 0; t < r; ++t) {
      ++counts[WeightedCompleteGraph::edge_index(k, c.vertices[t], c.vertices[(t + 1) % r])];
    }
  }
  return counts;
}

double cycle_gain(const WeightedCompleteGraph& graph, const Cycle& cycle) {
  const std::size_t r = cycle.length();
  double gain = 1.0;
  for (std::size_t t = 0; t < r; ++t) {
    const std::size_t u = cycle.vertices[t];
    const std::size_t v = cycle.vertices[(t + 1) % r];
    if (u >= graph.vertices() || v >= graph.vertices() || u == v) {
      throw PreconditionError("cycle_gain: cycle does not fit the graph");
    }
    gain *= graph.weight(u, v);
  }
  return gain;
}

LemmaCheck verify_lemma(const WeightedCompleteGraph& graph, std::size_t r) {
  check_range(graph.vertices(), r, 9, "verify_lemma");
  const auto cycles = enumerate_cycles(graph.vertices(), r);
  double gain_sum = 0.0;
  for (const Cycle& c : cycles) gain_sum += cycle_gain(graph, c);
  double square_sum = 0.0;
  for (double w : graph.weights()) square_sum += w * w;

  LemmaCheck check;
  check.lhs = gain_sum / static_cast<double>(cycles.size());
  check.rhs = std::pow(square_sum / static_cast<double>(graph.edges()),
                       static_cast<double>(r) / 2.0);
  check.holds = check.lhs <= check.rhs + 1e-12 * check.rhs;
  return check;
}

FactsReport verify_facts(std::size_t k, std::size_t r, Seed seed) {
  check_range(k, r, 6, "verify_facts");
  if (r % 2 != 0) throw PreconditionError("verify_facts: r must be even");

  FactsReport rep;
  rep.k = k;
  rep.r = r;
  rep.cycles = enumerate_cycles(k, r).size();
  rep.edges = k * (k - 1) / 2;
  const bool incidence_integral = (rep.cycles * r) % rep.edges == 0;
  rep.incidence = rep.cycles * r / rep.edges;
  const std::uint64_t half = r / 2;

  // Expand (sum_i a_i^2)^(r/2) by the multinomial theorem; each coefficient
  // counts how many unit monomials share that exponent pattern.
  const std::uint64_t half_factorial = factorial(half);
  std::uint64_t expansion_terms = 0;
  std::vector<std::uint64_t> degree(rep.edges, 0);
  for_each_composition(rep.edges, half, [&](const std::vector<std::uint64_t>& exps) {
    std::uint64_t coeff = half_factorial;
    for (std::uint64_t e : exps) coeff /= factorial(e);
    expansion_terms += coeff;
    for (std::size_t i = 0; i < exps.size(); ++i) degree[i] += coeff * 2 * exps[i];
  });
  for (auto& d : degree) d *= rep.incidence;

  rep.monomials = rep.incidence * expansion_terms;
  rep.monomials_closed = rep.incidence * ipow(rep.edges, half);
  rep.degrees_uniform =
      std::all_of(degree.begin(), degree.end(), [&](std::uint64_t d) { return d == degree[0]; });
  rep.degree = degree[0];
  rep.degree_closed = rep.incidence * r * ipow(rep.edges, half - 1);
  rep.group_size = rep.monomials / rep.cycles;
  rep.group_size_closed = r * ipow(rep.edges, half - 1);

  CounterStream stream(seed);
  double log_sum = 0.0;
  for (std::size_t i = 0; i < rep.edges; ++i) {
    const double log_a = std::log(0.25 + stream.next_unit());
    rep.log_product += static_cast<double>(degree[i]) * log_a;
    log_sum += log_a;
  }
  rep.log_product_closed = static_cast<double>(rep.degree_closed) * log_sum;

  const double log_scale = std::max(1.0, std::abs(rep.log_product_closed));
  rep.holds = rep.cycles == cycle_count(k, r) && incidence_integral &&
              rep.monomials == rep.monomials_closed && rep.degrees_uniform &&
              rep.degree == rep.degree_closed && rep.monomials % rep.cycles == 0 &&
              rep.group_size == rep.group_size_closed &&
              std::abs(rep.log_product - rep.log_product_closed) <= 1e-12 * log_scale;
  return rep;
}

}  // namespace distid
