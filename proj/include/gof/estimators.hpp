#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "gof/distributions.hpp"
#include "gof/kernels.hpp"
#include "gof/sample.hpp"
#include "gof/transforms.hpp"

namespace gof {

enum class EstimatorKind { empirical, naive_kernel, transformed_kernel };

std::string_view estimator_kind_name(EstimatorKind kind);
EstimatorKind parse_estimator_kind(std::string_view name);  // "edf", "naive", "boundary-free"

// The three CDF estimators of the study plus the induced kernel densities:
//   empirical          F_n(x)   = (1/n) sum I(X_i <= x)
//   naive_kernel       Fhat(x)  = (1/n) sum W((x - X_i)/h)
//   transformed_kernel Ftil(x)  = (1/n) sum W((g^{-1}(x) - g^{-1}(X_i))/h)
// Fitted estimators are immutable and cheap to copy (the sample is shared).
class CdfEstimator {
public:
    static CdfEstimator empirical(Sample sample);
    static CdfEstimator naive_kernel(Sample sample, Kernel kernel, double h);
    static CdfEstimator transformed_kernel(Sample sample, Kernel kernel, double h, Bijection bijection);

    // CDF value. The transformed kind requires x in the closure of the
    // support and returns exactly 0/1 at its boundary points; the other two
    // kinds accept any real x.
    double cdf(double x) const;
    double operator()(double x) const { return cdf(x); }

    // Density value; kernel kinds only. The transformed kind requires x
    // strictly inside the support.
    double pdf(double x) const;

    EstimatorKind kind() const { return kind_; }
    const Sample& sample() const { return *sample_; }
    std::size_t n() const { return sample_->size(); }
    double bandwidth() const { return h_; }  // NaN for the empirical kind
    const std::optional<Kernel>& kernel() const { return kernel_; }
    const std::optional<Bijection>& bijection() const { return bijection_; }
    // g^{-1}(X_i), sorted; transformed kind only.
    const std::vector<double>& transformed_values() const { return transformed_; }

private:
    CdfEstimator(EstimatorKind kind, Sample sample);

    EstimatorKind kind_;
    std::shared_ptr<const Sample> sample_;
    std::optional<Kernel> kernel_;
    std::optional<Bijection> bijection_;
    double h_;
    std::vector<double> transformed_;
};

// Mean of W((y - Y_i)/h) over sorted points; the shared evaluation core of
// both kernel CDF estimators. Compact kernels are windowed by binary search.
double kernel_cdf_sum(const std::vector<double>& sorted, const Kernel& kernel, double h, double y);

// Mean of K((y - Y_i)/h)/h over sorted points.
double kernel_pdf_sum(const std::vector<double>& sorted, const Kernel& kernel, double h, double y);

struct BiasVariance {
    double bias;
    double variance;
};

enum class MomentTarget { cdf, pdf };

// Leading-order bias/variance of the transformed estimators at x, per the
// asymptotic expansions (the o(.) remainders are dropped):
//   cdf: bias = (h^2/2) c1(x) m2,  var = F(1-F)/n - (2h/n) g'(y) f(x) r1
//   pdf: bias = h^2 c2(x) m2 / (2 g'(y)),  var = f(x) intK2 / (n h g'(y))
// with y = g^{-1}(x),
//   c1 = g''(y) f + g'(y)^2 f',  c2 = g'''(y) f + 3 g''(y) g'(y) f' + g'(y)^3 f''.
BiasVariance theoretical_bias_variance(const ReferenceDistribution& dist, const Bijection& bijection,
                                       const Kernel& kernel, double h, std::size_t n, double x,
                                       MomentTarget target);

}  // namespace gof
