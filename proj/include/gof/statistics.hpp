#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gof/distributions.hpp"
#include "gof/estimators.hpp"

namespace gof {

enum class StatFamily { ks, cvm };

std::string_view stat_family_name(StatFamily family);
StatFamily parse_stat_family(std::string_view name);

struct KsOptions {
    // Candidate grid: null quantiles at equispaced u plus the sample points
    // and the finite support endpoints.
    std::size_t grid_points = 4096;
    // One golden-section polish of the bracketing candidate pair.
    bool refine = true;
};

struct KsResult {
    double statistic = 0.0;  // D = sup |Fest - F|
    double x_star = 0.0;     // location of the supremum
};

// Precomputed null-quantile grids; share one instance across replications
// when testing many samples against the same null.
class NullGrids {
public:
    NullGrids(const ReferenceDistribution& null, std::size_t ks_points = 4096,
              std::size_t cvm_nodes = 512);

    const std::vector<double>& ks_candidates() const { return ks_candidates_; }
    const std::vector<double>& cvm_u() const { return cvm_u_; }
    const std::vector<double>& cvm_x() const { return cvm_x_; }
    const std::vector<double>& cvm_w() const { return cvm_w_; }
    std::size_t ks_points() const { return ks_points_; }

private:
    std::size_t ks_points_;
    std::vector<double> ks_candidates_;  // sorted x locations, endpoints included
    std::vector<double> cvm_u_, cvm_x_, cvm_w_;
};

// Kolmogorov-Smirnov distance between an estimator and the null CDF.
// The empirical kind uses the exact order-statistic formula; kernel kinds
// scan the candidate grid and refine. Throws std::invalid_argument when the
// sample support is not contained in the null support.
KsResult ks_statistic(const CdfEstimator& estimator, const ReferenceDistribution& null,
                      const KsOptions& options = {});
KsResult ks_statistic(const CdfEstimator& estimator, const ReferenceDistribution& null,
                      const NullGrids& grids, bool refine = true);

// Grid-scan KS for an arbitrary CDF-like callable (used by tests to feed the
// null itself as a degenerate estimator).
KsResult ks_statistic_fn(const std::function<double(double)>& cdf,
                         const std::vector<double>& sample_points,
                         const ReferenceDistribution& null, const KsOptions& options = {});

// Cramer-von Mises statistic. The empirical kind uses the classical
// computing formula 1/(12n) + sum (F(X_(i)) - (2i-1)/(2n))^2; kernel kinds
// integrate n * int_0^1 [Fest(Q(u)) - u]^2 du by composite Gauss-Legendre.
double cvm_statistic(const CdfEstimator& estimator, const ReferenceDistribution& null,
                     std::size_t nodes = 512);
double cvm_statistic(const CdfEstimator& estimator, const ReferenceDistribution& null,
                     const NullGrids& grids);
double cvm_statistic_fn(const std::function<double(double)>& cdf, std::size_t n,
                        const ReferenceDistribution& null, std::size_t nodes = 512);

// Asymptotic Kolmogorov law, p = 2 sum (-1)^(k-1) exp(-2 k^2 n D^2).
double ks_pvalue(double d, std::size_t n);
// Same law as a function of lambda = sqrt(n) * D.
double ks_scaled_pvalue(double lambda);
// lambda such that ks_scaled_pvalue(lambda) = alpha.
double ks_critical_value(double alpha);

// Asymptotic omega^2 law for the CvM statistic (Bessel-K series).
double cvm_pvalue(double t);
double cvm_critical_value(double alpha);

struct TestReport {
    StatFamily family = StatFamily::ks;
    EstimatorKind estimator = EstimatorKind::empirical;
    std::string transform;       // "" when no bijection is involved
    std::size_t n = 0;
    double statistic = 0.0;      // D or T
    double scaled_statistic = 0.0;  // sqrt(n) D for KS; T itself for CvM
    double p_value = 1.0;
    double alpha = 0.01;
    bool reject = false;
    double critical_value = 0.0;  // on the scaled scale, at alpha
    double x_star = 0.0;          // KS sup location (NaN for CvM)
    double bandwidth = 0.0;       // NaN for the empirical kind
    std::size_t grid_points = 0;
};

TestReport run_test(const CdfEstimator& estimator, const ReferenceDistribution& null,
                    StatFamily family, double alpha, const KsOptions& options = {});
TestReport run_test(const CdfEstimator& estimator, const ReferenceDistribution& null,
                    StatFamily family, double alpha, const NullGrids& grids);

// |classical - smoothed| for one sample under the shared-law bandwidth
// regime h = s * n^(-0.3). The smoothed statistic uses the
// transformed estimator when a bijection is given, the naive one otherwise.
double equivalence_gap(const Sample& sample, const ReferenceDistribution& null, const Kernel& kernel,
                       const std::optional<Bijection>& bijection, StatFamily family);

}  // namespace gof
