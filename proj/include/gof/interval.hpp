#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace gof {

// An interval of the real line, possibly unbounded on either side.
// Endpoints marked open are excluded; the study supports are all open.
struct Interval {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    bool lower_open = true;
    bool upper_open = true;

    static Interval real_line() { return {}; }

    static Interval positive_half_line() { return make(0.0, std::numeric_limits<double>::infinity()); }

    static Interval unit() { return make(0.0, 1.0); }

    static Interval make(double lo, double hi, bool lo_open = true, bool hi_open = true) {
        if (!(lo < hi)) {
            throw std::invalid_argument("interval: lower bound must be strictly below upper bound");
        }
        if (std::isnan(lo) || std::isnan(hi)) {
            throw std::invalid_argument("interval: endpoints must not be NaN");
        }
        return Interval{lo, hi, lo_open, hi_open};
    }

    bool bounded_below() const { return std::isfinite(lower); }
    bool bounded_above() const { return std::isfinite(upper); }
    bool bounded() const { return bounded_below() && bounded_above(); }
    bool is_real_line() const { return !bounded_below() && !bounded_above(); }
    double width() const { return upper - lower; }

    bool contains(double x) const {
        if (x < lower || x > upper) return false;
        if (x == lower && lower_open) return false;
        if (x == upper && upper_open) return false;
        return true;
    }

    // Strict interior, regardless of the open flags.
    bool contains_interior(double x) const { return x > lower && x < upper; }

    // x in [lower, upper], boundary points included.
    bool contains_closure(double x) const { return x >= lower && x <= upper; }

    bool covers(const Interval& other) const {
        return lower <= other.lower && upper >= other.upper;
    }

    std::string str() const {
        auto fmt = [](double v) {
            if (std::isinf(v)) return std::string(v > 0 ? "inf" : "-inf");
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%g", v);
            return std::string(buf);
        };
        return (lower_open ? "(" : "[") + fmt(lower) + "," + fmt(upper) + (upper_open ? ")" : "]");
    }
};

}  // namespace gof
