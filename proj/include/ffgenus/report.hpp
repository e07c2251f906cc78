#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ffgenus/genus.hpp"

namespace ffg {

inline constexpr int kReportVersion = 1;

/// F_q for a prime power q; throws std::invalid_argument otherwise.
FieldPtr field_of_size(u64 q);

struct ReportContext {
  u64 q = 0;
  std::string f;
  bool timings = true;
};

/// {version, q, f, n, Cf, delta, delta_inf, primes, ind_inf, finite_index, genus, timings, warnings}.
/// genus is null for reports from index_breakdown.
nlohmann::ordered_json report_to_json(const GenusReport& r, const ReportContext& ctx, bool has_genus = true);

GenusReport report_from_json(const nlohmann::ordered_json& j);

/// Fields carried by the JSON schema agree.
bool same_report(const GenusReport& a, const GenusReport& b);

/// Human-readable table.
std::string report_to_text(const GenusReport& r, const ReportContext& ctx, bool has_genus = true);

}  // namespace ffg
