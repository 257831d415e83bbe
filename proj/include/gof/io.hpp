#pragma once

#include <iosfwd>
#include <string_view>

#include "gof/interval.hpp"
#include "gof/sample.hpp"

namespace gof {

// Reads one numeric value per line (or the first CSV column), sorts, and
// validates against the declared support. A non-numeric first line is
// treated as a header and skipped; any later non-numeric token is a
// DataError naming its line.
Sample ingest_data(std::istream& source, const Interval& support);

// "0,1", "0,inf", "-inf,inf". Throws UsageError on malformed input.
Interval parse_interval(std::string_view text);

}  // namespace gof
