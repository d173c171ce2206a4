#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qzeta/fraction.hpp"
#include "qzeta/laurent.hpp"
#include "qzeta/partition.hpp"
#include "qzeta/verify.hpp"

namespace qzeta {

// Value serialization: a Laurent polynomial is the sorted list of records
// (e_q, e_t, coefficient as a decimal string); a fraction adds the
// denominator factor list.
nlohmann::json to_json(const Laurent& p);
nlohmann::json to_json(const Fraction& f);
nlohmann::json to_json(const SuiteReport& rep, bool include_timing);

std::string report_text(const SuiteReport& rep, bool include_timing);

/// Fixed, versioned column set for oracle CSV export.
std::string oracle_csv_header();
std::string oracle_csv_row(const std::string& target,
                           const std::vector<std::pair<std::string, std::string>>& params,
                           std::int64_t degree, long long value, double wall_ms,
                           bool include_timing);

Partition parse_partition(const std::string& s);             // "3,2,1" or ""
std::vector<std::int64_t> parse_tuple(const std::string& s);  // "2,0,-1"

}  // namespace qzeta
