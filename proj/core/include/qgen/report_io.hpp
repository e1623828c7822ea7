#pragma once

#include <string>

#include "qgen/gencheck.hpp"

namespace qgen {

/// Report JSON without the timing block or hash; byte-identical for
/// identical tasks.
std::string canonical_json(const GenerationReport& report);

/// Full report: canonical content plus "timing" and "config_hash".
std::string report_json(const GenerationReport& report, int indent = 2);

/// Header row word,<subgroup dims...>,intersection,target,verdict.
std::string report_csv(const GenerationReport& report);

std::string suite_json(const SuiteResult& result, int indent = 2);
/// One CSV table per report, each preceded by a "# <task>" line.
std::string suite_csv(const SuiteResult& result);

/// Lower-case hex SHA-256.
std::string sha256_hex(const std::string& data);

}  // namespace qgen
