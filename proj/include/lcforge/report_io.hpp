#pragma once

#include <string>
#include <string_view>

#include "lcforge/census.hpp"

namespace lcforge::census {

/// `L,census,formula,verdict`; reports carrying a literature column add
/// `fixture` before `verdict`. Missing formula values are left empty.
std::string to_csv(const CensusReport& report);

/// Keys sorted, two-space indent, trailing newline. The stable variant omits
/// `elapsed_ms` so output depends only on the query.
std::string to_json(const CensusReport& report, bool stable = true);

/// Inverse of to_json; elapsed time is restored when present.
CensusReport from_json(std::string_view text);

/// Human-readable table; sampled reports show proportions with 3-sigma intervals.
std::string to_table(const CensusReport& report, bool stable = true);

}  // namespace lcforge::census
