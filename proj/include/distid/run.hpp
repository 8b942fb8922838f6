#pragma once

#include <ostream>
#include <string>

#include "distid/config.hpp"

namespace distid {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitIo = 4;

/// Executes the command and returns the rendered report (CSV or JSON text).
/// Throws ConfigError, PreconditionError or IoError.
std::string render(const RunConfig& config);

/// render() plus output to config.out (or `fallback` when out is empty).
/// Exceptions become exit codes with a diagnostic on `diag`.
int run(const RunConfig& config, std::ostream& fallback, std::ostream& diag);

}  // namespace distid
