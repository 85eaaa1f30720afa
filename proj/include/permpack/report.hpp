#pragma once

#include <string>

#include "permpack/formulas.hpp"
#include "permpack/search.hpp"
#include "permpack/transforms.hpp"

namespace permpack {

// JSON and CSV renderings for the CLI. Counts are emitted as exact decimal
// integers (JSON numbers carry arbitrary precision); ratios as numerator,
// denominator and a decimal rendering. CSV is UTF-8, comma-separated, one
// header row, LF line endings.

std::string to_json(const RewriteOutcome& out);
std::string rewrite_csv_header();
std::string to_csv_row(const RewriteOutcome& out);

std::string to_json(const SearchResult& result);
std::string search_csv(const SearchResult& result);
std::string search_human(const SearchResult& result);

std::string to_json(const RatioTable& table);
std::string ratio_csv(const RatioTable& table);
std::string ratio_human(const RatioTable& table);

std::string to_json(const DensityReport& report);
std::string density_csv(const DensityReport& report);
std::string density_human(const DensityReport& report);

}  // namespace permpack
