#include "gof/sample.hpp"

#include <algorithm>
#include <cmath>

#include "gof/errors.hpp"

namespace gof {

Sample::Sample(std::vector<double> values, Interval declared_support)
    : values_(std::move(values)), support_(declared_support) {
    if (values_.empty()) {
        throw DataError("sample: empty input");
    }
    std::sort(values_.begin(), values_.end());
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw DataError("sample: non-finite value");
        }
        if (!support_.contains_interior(v)) {
            throw DataError("sample: value " + std::to_string(v) + " outside declared support " +
                            support_.str());
        }
    }
    double s = 0.0;
    for (double v : values_) s += v;
    mean_ = s / static_cast<double>(values_.size());
    double ss = 0.0;
    for (double v : values_) ss += (v - mean_) * (v - mean_);
    stddev_ = values_.size() > 1 ? std::sqrt(ss / static_cast<double>(values_.size() - 1)) : 0.0;
}

}  // namespace gof
