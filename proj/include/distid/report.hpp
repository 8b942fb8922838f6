#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "distid/bounds.hpp"
#include "distid/mc.hpp"

namespace distid {

/// One verify_lemma trial or one counting identity from verify_facts.
struct LemmaRow {
  std::string check;  ///< "lemma", "monomials", "degree" or "group_size"
  std::uint64_t k = 0;
  std::uint64_t r = 0;
  std::uint64_t trial = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;

  friend bool operator==(const LemmaRow&, const LemmaRow&) = default;
};

/// Empirical estimate paired with the closed-form bounds at the same n.
struct SimulationRow {
  McEstimate estimate;
  BoundReport bound;

  friend bool operator==(const SimulationRow&, const SimulationRow&) = default;
};

/// Header plus string cells; str() renders RFC 4180-style lines with '\n'.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const;
};

/// 17 significant digits; infinities as "inf"/"-inf".
std::string format_double(double value);

CsvTable bounds_csv(const std::vector<BoundReport>& reports);
CsvTable simulate_csv(const std::vector<SimulationRow>& rows);
CsvTable exponent_csv(const ExponentFit& fit);
CsvTable lemma_csv(const std::vector<LemmaRow>& rows);
CsvTable trend_csv(const TrendReport& report);

// JSON encodings. Infinite and NaN doubles are written as the strings
// "inf", "-inf" and "nan" so every report survives a round trip.
void to_json(nlohmann::json& j, const BoundReport& r);
void from_json(const nlohmann::json& j, BoundReport& r);
void to_json(nlohmann::json& j, const McEstimate& e);
void from_json(const nlohmann::json& j, McEstimate& e);
void to_json(nlohmann::json& j, const SimulationRow& r);
void from_json(const nlohmann::json& j, SimulationRow& r);
void to_json(nlohmann::json& j, const ExponentFit& f);
void from_json(const nlohmann::json& j, ExponentFit& f);
void to_json(nlohmann::json& j, const LemmaRow& r);
void from_json(const nlohmann::json& j, LemmaRow& r);
void to_json(nlohmann::json& j, const TrendPoint& p);
void from_json(const nlohmann::json& j, TrendPoint& p);
void to_json(nlohmann::json& j, const TrendReport& r);
void from_json(const nlohmann::json& j, TrendReport& r);

}  // namespace distid
