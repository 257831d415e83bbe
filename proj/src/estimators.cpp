#include "gof/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gof {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

std::string_view estimator_kind_name(EstimatorKind kind) {
    switch (kind) {
        case EstimatorKind::empirical: return "edf";
        case EstimatorKind::naive_kernel: return "naive";
        case EstimatorKind::transformed_kernel: return "boundary-free";
    }
    return "?";
}

EstimatorKind parse_estimator_kind(std::string_view name) {
    if (name == "edf" || name == "empirical") return EstimatorKind::empirical;
    if (name == "naive") return EstimatorKind::naive_kernel;
    if (name == "boundary-free" || name == "transformed") return EstimatorKind::transformed_kernel;
    throw std::invalid_argument("unknown estimator kind: " + std::string(name));
}

double kernel_cdf_sum(const std::vector<double>& sorted, const Kernel& kernel, double h, double y) {
    const double n = static_cast<double>(sorted.size());
    const double radius = kernel.support_radius();
    if (std::isfinite(radius)) {
        // Points below y - h*r contribute exactly 1, above y + h*r exactly 0.
        const auto lo = std::lower_bound(sorted.begin(), sorted.end(), y - h * radius);
        const auto hi = std::upper_bound(lo, sorted.end(), y + h * radius);
        double sum = static_cast<double>(lo - sorted.begin());
        for (auto it = lo; it != hi; ++it) sum += kernel.integrated((y - *it) / h);
        return sum / n;
    }
    double sum = 0.0;
    for (double v : sorted) sum += kernel.integrated((y - v) / h);
    return sum / n;
}

double kernel_pdf_sum(const std::vector<double>& sorted, const Kernel& kernel, double h, double y) {
    const double n = static_cast<double>(sorted.size());
    const double radius = kernel.support_radius();
    auto begin = sorted.begin(), end = sorted.end();
    if (std::isfinite(radius)) {
        begin = std::lower_bound(sorted.begin(), sorted.end(), y - h * radius);
        end = std::upper_bound(begin, sorted.end(), y + h * radius);
    }
    double sum = 0.0;
    for (auto it = begin; it != end; ++it) sum += kernel.evaluate((y - *it) / h);
    return sum / (n * h);
}

CdfEstimator::CdfEstimator(EstimatorKind kind, Sample sample)
    : kind_(kind), sample_(std::make_shared<const Sample>(std::move(sample))), h_(kNaN) {}

CdfEstimator CdfEstimator::empirical(Sample sample) {
    return CdfEstimator(EstimatorKind::empirical, std::move(sample));
}

CdfEstimator CdfEstimator::naive_kernel(Sample sample, Kernel kernel, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("kernel estimator: bandwidth must be positive");
    CdfEstimator est(EstimatorKind::naive_kernel, std::move(sample));
    est.kernel_ = kernel;
    est.h_ = h;
    return est;
}

CdfEstimator CdfEstimator::transformed_kernel(Sample sample, Kernel kernel, double h, Bijection bijection) {
    if (!(h > 0.0)) throw std::invalid_argument("kernel estimator: bandwidth must be positive");
    if (!bijection.support().covers(sample.support())) {
        throw std::invalid_argument("transformed estimator: bijection support must cover the sample support");
    }
    CdfEstimator est(EstimatorKind::transformed_kernel, std::move(sample));
    est.kernel_ = kernel;
    est.h_ = h;
    est.bijection_ = bijection;
    est.transformed_.reserve(est.sample_->size());
    for (double x : est.sample_->values()) est.transformed_.push_back(bijection.inverse(x));
    std::sort(est.transformed_.begin(), est.transformed_.end());
    return est;
}

double CdfEstimator::cdf(double x) const {
    switch (kind_) {
        case EstimatorKind::empirical: {
            const auto& v = sample_->values();
            const auto it = std::upper_bound(v.begin(), v.end(), x);
            return static_cast<double>(it - v.begin()) / static_cast<double>(v.size());
        }
        case EstimatorKind::naive_kernel:
            return kernel_cdf_sum(sample_->values(), *kernel_, h_, x);
        case EstimatorKind::transformed_kernel: {
            const double y = bijection_->inverse(x);  // throws outside the closure
            if (y == -std::numeric_limits<double>::infinity()) return 0.0;
            if (y == std::numeric_limits<double>::infinity()) return 1.0;
            return kernel_cdf_sum(transformed_, *kernel_, h_, y);
        }
    }
    return 0.0;
}

double CdfEstimator::pdf(double x) const {
    switch (kind_) {
        case EstimatorKind::empirical:
            throw std::logic_error("pdf: the empirical estimator has no density");
        case EstimatorKind::naive_kernel:
            return kernel_pdf_sum(sample_->values(), *kernel_, h_, x);
        case EstimatorKind::transformed_kernel: {
            if (!bijection_->support().contains_interior(x)) {
                throw std::domain_error("pdf: x must lie strictly inside the support");
            }
            const double y = bijection_->inverse(x);
            return kernel_pdf_sum(transformed_, *kernel_, h_, y) / bijection_->d1(y);
        }
    }
    return 0.0;
}

BiasVariance theoretical_bias_variance(const ReferenceDistribution& dist, const Bijection& bijection,
                                       const Kernel& kernel, double h, std::size_t n, double x,
                                       MomentTarget target) {
    const double y = bijection.inverse(x);
    const double g1 = bijection.d1(y);
    const double g2 = bijection.d2(y);
    const double f = dist.pdf(x);
    const double f1 = dist.pdf_deriv1(x);
    const double m2 = kernel.second_moment();
    const double nn = static_cast<double>(n);

    if (target == MomentTarget::cdf) {
        const double c1 = g2 * f + g1 * g1 * f1;
        const double big_f = dist.cdf(x);
        return {0.5 * h * h * c1 * m2,
                big_f * (1.0 - big_f) / nn - (2.0 * h / nn) * g1 * f * kernel.r1()};
    }
    const double g3 = bijection.d3(y);
    const double f2 = dist.pdf_deriv2(x);
    const double c2 = g3 * f + 3.0 * g2 * g1 * f1 + g1 * g1 * g1 * f2;
    return {0.5 * h * h * c2 * m2 / g1, f * kernel.squared_integral() / (nn * h * g1)};
}

}  // namespace gof
