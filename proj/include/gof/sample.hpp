#pragma once

#include <cstddef>
#include <vector>

#include "gof/interval.hpp"

namespace gof {

// An i.i.d. sample with a declared support. Values are kept sorted; every
// value must lie strictly inside the support (boundary-valued observations
// are a data error, not an estimation case). Ties are permitted.
class Sample {
public:
    Sample(std::vector<double> values, Interval declared_support);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const Interval& support() const { return support_; }

    double min() const { return values_.front(); }
    double max() const { return values_.back(); }
    double mean() const { return mean_; }
    // Sample standard deviation (n-1 denominator); 0 for n == 1.
    double stddev() const { return stddev_; }

private:
    std::vector<double> values_;
    Interval support_;
    double mean_;
    double stddev_;
};

}  // namespace gof
