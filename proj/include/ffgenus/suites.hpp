#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ffgenus/ff.hpp"

namespace ffg {

/// One published row: input and expected (g, delta, delta_inf).
struct SuiteRow {
  std::string label;
  u64 q = 0;
  std::string f;
  i64 g = 0, delta = 0;
  std::optional<i64> delta_inf;
  /// Excluded from default runs because of size.
  bool heavy = false;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
std::vector<SuiteRow> suite(std::string_view name);

}  // namespace ffg
