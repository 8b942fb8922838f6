#pragma once

#include <span>

namespace distid {

/// log(sum_i exp(terms[i])) with max subtraction. Summation runs in index
/// order so the result does not depend on how the terms were produced.
/// Returns -inf for an empty span or when every term is -inf.
double log_sum_exp(std::span<const double> terms);

/// Ordinary least-squares slope of y against x. Requires at least two
/// distinct x values.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

}  // namespace distid
