#include "gof/io.hpp"

#include <charconv>
#include <istream>
#include <string>
#include <vector>

#include "gof/errors.hpp"

namespace gof {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_double(std::string_view token, double& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto result = std::from_chars(begin, end, out);
    return result.ec == std::errc{} && result.ptr == end;
}

}  // namespace

Sample ingest_data(std::istream& source, const Interval& support) {
    std::vector<double> values;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(source, line)) {
        ++line_number;
        std::string_view view = trim(line);
        if (view.empty()) continue;
        const auto comma = view.find(',');
        const std::string_view token = trim(comma == std::string_view::npos ? view : view.substr(0, comma));
        double value;
        if (!parse_double(token, value)) {
            // A non-numeric first row is a header.
            if (line_number == 1) continue;
            throw DataError("line " + std::to_string(line_number) + ": non-numeric token \"" +
                            std::string(token) + "\"");
        }
        if (!support.contains_interior(value)) {
            throw DataError("line " + std::to_string(line_number) + ": value " + std::string(token) +
                            " outside declared support " + support.str());
        }
        values.push_back(value);
    }
    if (values.empty()) {
        throw DataError("empty input");
    }
    return Sample(std::move(values), support);
}

Interval parse_interval(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        throw UsageError("support must be LO,HI (e.g. 0,inf): got '" + std::string(text) + "'");
    }
    auto parse_bound = [&](std::string_view token, bool lower) {
        token = trim(token);
        if (token == "inf" || token == "+inf") return std::numeric_limits<double>::infinity();
        if (token == "-inf") return -std::numeric_limits<double>::infinity();
        double value;
        if (!parse_double(token, value)) {
            throw UsageError(std::string("bad support ") + (lower ? "lower" : "upper") + " bound: '" +
                             std::string(token) + "'");
        }
        return value;
    };
    const double lo = parse_bound(text.substr(0, comma), true);
    const double hi = parse_bound(text.substr(comma + 1), false);
    if (!(lo < hi)) {
        throw UsageError("support bounds must satisfy lo < hi: got '" + std::string(text) + "'");
    }
    return Interval{lo, hi, true, true};
}

}  // namespace gof
