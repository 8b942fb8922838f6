#include "distid/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "distid/errors.hpp"
#include "distid/graph.hpp"
#include "distid/numeric.hpp"

namespace distid {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log of the r=2 gain exp(-2 n B). Written as -n (b + b) so a 2-cycle, whose
// gain is summed edge by edge, produces the identical double.
double pair_log_term(std::uint64_t n, double b) { return -static_cast<double>(n) * (b + b); }

PairSum from_log(double log_S) { return PairSum{std::exp(log_S), log_S}; }

}  // namespace

std::vector<double> pairwise_bhattacharyya_serial(const DistributionFamily& family) {
  const std::size_t a = family.size();
  std::vector<double> out;
  out.reserve(a * (a - 1) / 2);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = i + 1; j < a; ++j) out.push_back(bhattacharyya(family[i], family[j]));
  }
  return out;
}

std::vector<double> pairwise_bhattacharyya(const DistributionFamily& family) {
  const auto a = static_cast<std::int64_t>(family.size());
  std::vector<double> out(static_cast<std::size_t>(a * (a - 1) / 2));
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < a; ++i) {
    const auto row = static_cast<std::size_t>(i);
    std::size_t slot = WeightedCompleteGraph::edge_index(family.size(), row, row + 1);
    for (std::size_t j = row + 1; j < family.size(); ++j) {
      out[slot++] = bhattacharyya(family[row], family[j]);
    }
  }
  return out;
}

PairSum pairwise_sum_S(const DistributionFamily& family, std::uint64_t n) {
  if (n == 0) throw PreconditionError("pairwise_sum_S: n must be >= 1");
  std::vector<double> terms = pairwise_bhattacharyya(family);
  for (double& t : terms) t = pair_log_term(n, t);
  return from_log(log_sum_exp(terms));
}

UpperBound upper_bound(double S) {
  if (!(S >= 0.0)) throw PreconditionError("upper_bound: S must be >= 0");
  UpperBound out;
  const double root = 4.0 * std::sqrt(S);
  if (!(root < 1.0)) return out;
  const double value = 16.0 * S / (1.0 - root);
  out.clamped = value > 1.0;
  out.value = out.clamped ? 1.0 : value;
  return out;
}

double lower_bound(double S) {
  if (!(S >= 0.0)) throw PreconditionError("lower_bound: S must be >= 0");
  if (std::isinf(S)) return 1.0;
  const double root = std::sqrt(S);
  return root / (8.0 + root);
}

PairSum cycle_sum_bound(const DistributionFamily& family, std::uint64_t n, std::size_t r_max) {
  const std::size_t a = family.size();
  if (a > 9) throw PreconditionError("cycle_sum_bound: family size " + std::to_string(a) + " > 9");
  if (r_max < 2 || r_max > a) throw PreconditionError("cycle_sum_bound: need 2 <= r_max <= A");
  if (n == 0) throw PreconditionError("cycle_sum_bound: n must be >= 1");
  const std::vector<double> distance = pairwise_bhattacharyya(family);
  std::vector<double> terms;
  for (std::size_t r = 2; r <= r_max; ++r) {
    for (const Cycle& c : enumerate_cycles(a, r)) {
      double exponent = 0.0;
      for (std::size_t t = 0; t < r; ++t) {
        exponent += distance[WeightedCompleteGraph::edge_index(a, c.vertices[t],
                                                                c.vertices[(t + 1) % r])];
      }
      terms.push_back(-static_cast<double>(n) * exponent);
    }
  }
  return from_log(log_sum_exp(terms));
}

double count_ratio(std::uint64_t k, std::uint64_t r) {
  if (r < 2 || r > k) throw PreconditionError("count_ratio: need 2 <= r <= k");
  const double kd = static_cast<double>(k);
  const double rd = static_cast<double>(r);
  const double log_cycles = std::lgamma(kd + 1.0) - std::lgamma(rd + 1.0) -
                            std::lgamma(kd - rd + 1.0) + std::lgamma(rd) - std::log(2.0);
  const double log_edges = std::log(kd * (kd - 1.0) / 2.0);
  return std::exp(log_cycles - 0.5 * rd * log_edges);
}

bool count_ratio_within_four_pow(std::uint64_t k, std::uint64_t r) {
  using boost::multiprecision::cpp_int;
  if (r < 2 || r > k) throw PreconditionError("count_ratio: need 2 <= r <= k");
  // 2N = C(k,r) (r-1)!, exact.
  cpp_int twice_cycles = 1;
  for (std::uint64_t i = 0; i < r; ++i) twice_cycles *= (k - i);
  twice_cycles /= r;  // k!/(k-r)! / r = C(k,r) (r-1)!
  const cpp_int edges = cpp_int(k) * (k - 1) / 2;
  // N <= 4^r n^(r/2)  <=>  (2N)^2 <= 4 * 16^r * n^r
  const cpp_int lhs = twice_cycles * twice_cycles;
  const cpp_int rhs = 4 * boost::multiprecision::pow(cpp_int(16), static_cast<unsigned>(r)) *
                      boost::multiprecision::pow(edges, static_cast<unsigned>(r));
  return lhs <= rhs;
}

BoundReport make_bound_report(std::uint64_t n, std::uint64_t A, const PairSum& sum) {
  BoundReport rep;
  rep.n = n;
  rep.A = A;
  rep.S = sum.S;
  rep.log_S = sum.log_S;
  rep.upper = upper_bound(sum.S);
  rep.lower = lower_bound(sum.S);
  return rep;
}

BoundReport make_bound_report(const DistributionFamily& family, std::uint64_t n) {
  return make_bound_report(n, family.size(), pairwise_sum_S(family, n));
}

// ---- identifiability trend ------------------------------------------------

double GrowthRule::size_at(std::uint64_t n) const {
  const double nd = static_cast<double>(n);
  switch (kind) {
    case Kind::kConstant:
      return static_cast<double>(size);
    case Kind::kPolynomial:
      return std::ceil(std::pow(nd, degree));
    case Kind::kExponential:
      return std::ceil(std::exp(rate * nd));
  }
  return 0.0;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kIdentifiableTrend:
      return "identifiable-trend";
    case Verdict::kNotIdentifiableTrend:
      return "not-identifiable-trend";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "identifiable-trend") return Verdict::kIdentifiableTrend;
  if (s == "not-identifiable-trend") return Verdict::kNotIdentifiableTrend;
  if (s == "inconclusive") return Verdict::kInconclusive;
  throw PreconditionError("unknown verdict '" + s + "'");
}

void validate_sequence_spec(const FamilySequenceSpec& spec) {
  validate_family_spec(spec.generator);
  if (spec.n_grid.size() < 3) throw PreconditionError("sweep: n_grid needs at least 3 points");
  for (std::size_t i = 0; i < spec.n_grid.size(); ++i) {
    if (spec.n_grid[i] == 0) throw PreconditionError("sweep: n must be >= 1");
    if (i > 0 && spec.n_grid[i] <= spec.n_grid[i - 1]) {
      throw PreconditionError("sweep: n_grid must be strictly increasing");
    }
  }
  if (spec.pair_budget == 0) throw PreconditionError("sweep: pair_budget must be >= 1");
  if (spec.growth.kind == GrowthRule::Kind::kExponential && !(spec.growth.rate >= 0.0)) {
    throw PreconditionError("sweep: exponential rate must be >= 0");
  }
  for (std::uint64_t n : spec.n_grid) {
    const double a = spec.growth.size_at(n);
    if (!(a >= 2.0)) {
      throw PreconditionError("sweep: A_n = " + std::to_string(a) + " < 2 at n = " +
                              std::to_string(n));
    }
  }
}

TrendPoint trend_point(const FamilySequenceSpec& spec, std::uint64_t n) {
  TrendPoint point;
  point.n = n;
  point.A = spec.growth.size_at(n);
  const double pairs = point.A * (point.A - 1.0) / 2.0;

  if (pairs <= static_cast<double>(spec.pair_budget)) {
    const auto size = static_cast<std::uint64_t>(point.A);
    const DistributionFamily family = make_family(resize_family(spec.generator, size));
    point.log_S = pairwise_sum_S(family, n).log_S;
    point.pairs_evaluated = size * (size - 1) / 2;
    return point;
  }

  // Too many pairs: average exp(-2nB) over a seeded uniform sample of pairs
  // and scale by the pair count. Member indices are drawn from at most 2^53
  // positions so they stay exact as doubles.
  constexpr double kIndexCap = 9007199254740992.0;  // 2^53
  const auto index_space = static_cast<std::uint64_t>(std::min(point.A, kIndexCap));
  const FamilySpec generator = resize_family(spec.generator, index_space);
  CounterStream stream(derive_seed(spec.seed, n));
  std::vector<double> terms(spec.pair_budget);
  for (double& t : terms) {
    const std::uint64_t i = stream.next_below(index_space);
    std::uint64_t j = stream.next_below(index_space - 1);
    if (j >= i) ++j;
    t = pair_log_term(n, bhattacharyya(family_member(generator, i), family_member(generator, j)));
  }
  const double log_pairs = std::log(point.A) + std::log(point.A - 1.0) - std::log(2.0);
  point.log_S = log_pairs + log_sum_exp(terms) - std::log(static_cast<double>(spec.pair_budget));
  point.pairs_evaluated = spec.pair_budget;
  point.sampled = true;
  return point;
}

TrendReport identifiability_verdict(const FamilySequenceSpec& spec) {
  validate_sequence_spec(spec);
  TrendReport report;
  for (std::uint64_t n : spec.n_grid) report.points.push_back(trend_point(spec, n));

  const std::size_t total = report.points.size();
  report.window = (total + 1) / 2;
  const auto tail = std::span<const TrendPoint>(report.points).subspan(total - report.window);

  bool all_zero = true;
  bool any_zero = false;
  for (const auto& p : tail) {
    all_zero = all_zero && p.log_S == kNegInf;
    any_zero = any_zero || p.log_S == kNegInf;
  }
  if (all_zero) {
    report.slope = kNegInf;
    report.verdict = Verdict::kIdentifiableTrend;
    return report;
  }
  if (any_zero) {
    report.slope = std::numeric_limits<double>::quiet_NaN();
    report.verdict = Verdict::kInconclusive;
    return report;
  }

  std::vector<double> xs;
  std::vector<double> ys;
  bool strictly_decreasing = true;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    xs.push_back(static_cast<double>(tail[i].n));
    ys.push_back(tail[i].log_S);
    if (i > 0 && !(tail[i].log_S < tail[i - 1].log_S)) strictly_decreasing = false;
  }
  report.slope = least_squares_slope(xs, ys);
  if (report.slope < -kTrendSlopeThreshold && strictly_decreasing) {
    report.verdict = Verdict::kIdentifiableTrend;
  } else if (report.slope >= -kTrendSlopeThreshold) {
    // Flat within the threshold means S stays bounded away from zero.
    report.verdict = Verdict::kNotIdentifiableTrend;
  } else {
    report.verdict = Verdict::kInconclusive;
  }
  return report;
}

}  // namespace distid
