#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gof/interval.hpp"
#include "gof/rng.hpp"

namespace gof {

enum class DistFamily { gamma, weibull, lognormal, absnormal, uniform, beta };

// The reference distributions of the simulation study, used both as null
// hypotheses F and as data generators. gamma/weibull use the shape-scale
// convention (f.ex. Weibull(2,2) has CDF 1 - exp(-(x/2)^2)); absnormal is
// |Z| for standard normal Z. Immutable; safe to share across threads.
class ReferenceDistribution {
public:
    static ReferenceDistribution gamma(double shape, double scale);
    static ReferenceDistribution weibull(double shape, double scale);
    static ReferenceDistribution lognormal(double mu, double sigma);
    static ReferenceDistribution absnormal();
    static ReferenceDistribution uniform(double a, double b);
    static ReferenceDistribution beta(double a, double b);

    // Spec strings: "gamma:2,2", "weibull:2,2", "lognorm:0,1", "absnorm",
    // "uniform:0,1", "beta:1,3".
    static ReferenceDistribution parse(std::string_view spec);
    std::string spec_string() const;

    DistFamily family() const { return family_; }
    const std::vector<double>& params() const { return params_; }
    const Interval& support() const { return support_; }

    // Clamps to 0/1 outside the support.
    double cdf(double x) const;
    // Zero outside the open support.
    double pdf(double x) const;
    // u in (0,1); closed forms where available, otherwise bisection with a
    // Newton polish so that cdf(quantile(u)) = u within 1e-9.
    double quantile(double u) const;
    double median() const { return quantile(0.5); }

    // First and second derivatives of the density, used only by the
    // theoretical bias/variance formulas. x must be strictly interior.
    double pdf_deriv1(double x) const;
    double pdf_deriv2(double x) const;

    double sample(SeededRng& rng) const;
    std::vector<double> sample(SeededRng& rng, std::size_t n) const;

private:
    ReferenceDistribution(DistFamily family, std::vector<double> params, Interval support)
        : family_(family), params_(std::move(params)), support_(support) {}

    // d log f / dx and its derivative, per family.
    double log_density_deriv1(double x) const;
    double log_density_deriv2(double x) const;
    double sample_gamma(SeededRng& rng, double shape) const;

    DistFamily family_;
    std::vector<double> params_;
    Interval support_;
};

}  // namespace gof
