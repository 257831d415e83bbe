#include "gof/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gof/bandwidth.hpp"
#include "gof/detail/special.hpp"

namespace gof {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// 8-point Gauss-Legendre rule on [-1,1]; composed over panels below.
constexpr double kGlX[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                            0.9602898564975363};
constexpr double kGlW[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                            0.1012285362903763};

void check_support(const CdfEstimator& estimator, const ReferenceDistribution& null) {
    if (!null.support().covers(estimator.sample().support())) {
        throw std::invalid_argument("gof: null support does not cover the sample support");
    }
}

// The null's support may be wider than the estimator's; past its own
// boundary the transformed estimator continues as exact 0/1.
std::function<double(double)> extended_cdf(const CdfEstimator& estimator) {
    if (estimator.kind() != EstimatorKind::transformed_kernel) {
        return [estimator](double x) { return estimator.cdf(x); };
    }
    const Interval support = estimator.bijection()->support();
    return [estimator, support](double x) {
        if (x < support.lower) return 0.0;
        if (x > support.upper) return 1.0;
        return estimator.cdf(x);
    };
}

// Exact KS for the empirical CDF: max over the 2n one-sided gaps at the
// order statistics.
KsResult ks_empirical(const Sample& sample, const ReferenceDistribution& null) {
    const auto& x = sample.values();
    const double n = static_cast<double>(x.size());
    KsResult best;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = null.cdf(x[i]);
        const double upper = static_cast<double>(i + 1) / n - f;
        const double lower = f - static_cast<double>(i) / n;
        const double gap = std::max(upper, lower);
        if (gap > best.statistic) {
            best.statistic = gap;
            best.x_star = x[i];
        }
    }
    return best;
}

// Golden-section maximization of |cdf - F| inside [a,b], returning the best
// probe ever seen (the difference can have a very narrow peak when h is
// small, which only intermediate probes hit).
double refine_max(const std::function<double(double)>& diff, double a, double b, double& x_at) {
    constexpr double kGolden = 0.3819660112501051;
    double x1 = a + kGolden * (b - a);
    double x2 = b - kGolden * (b - a);
    double f1 = diff(x1);
    double f2 = diff(x2);
    double best = std::max(f1, f2);
    double best_x = f1 > f2 ? x1 : x2;
    for (int iter = 0; iter < 60 && (b - a) > 1e-13 * (1.0 + std::abs(a)); ++iter) {
        if (f1 > f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + kGolden * (b - a);
            f1 = diff(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - kGolden * (b - a);
            f2 = diff(x2);
        }
        if (f1 > best) { best = f1; best_x = x1; }
        if (f2 > best) { best = f2; best_x = x2; }
    }
    x_at = best_x;
    return best;
}

KsResult ks_scan(const std::function<double(double)>& cdf, const std::vector<double>& sample_points,
                 const ReferenceDistribution& null, const std::vector<double>& quantile_candidates,
                 bool refine) {
    std::vector<double> candidates;
    candidates.reserve(quantile_candidates.size() + sample_points.size());
    candidates = quantile_candidates;
    candidates.insert(candidates.end(), sample_points.begin(), sample_points.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    auto diff = [&](double x) { return std::abs(cdf(x) - null.cdf(x)); };

    KsResult best;
    std::size_t best_idx = 0;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
        const double d = diff(candidates[j]);
        if (d > best.statistic) {
            best.statistic = d;
            best.x_star = candidates[j];
            best_idx = j;
        }
    }
    if (refine && best_idx > 0 && best_idx + 1 < candidates.size()) {
        double x_at = best.x_star;
        const double refined = refine_max(diff, candidates[best_idx - 1], candidates[best_idx + 1], x_at);
        if (refined > best.statistic) {
            best.statistic = refined;
            best.x_star = x_at;
        }
    }
    return best;
}

std::vector<double> quantile_grid(const ReferenceDistribution& null, std::size_t points) {
    std::vector<double> grid;
    grid.reserve(points + 2);
    if (null.support().bounded_below()) grid.push_back(null.support().lower);
    for (std::size_t j = 1; j <= points; ++j) {
        grid.push_back(null.quantile(static_cast<double>(j) / static_cast<double>(points + 1)));
    }
    if (null.support().bounded_above()) grid.push_back(null.support().upper);
    return grid;
}

double cvm_kernel_quadrature(const std::function<double(double)>& cdf, std::size_t n,
                             const std::vector<double>& u, const std::vector<double>& x,
                             const std::vector<double>& w) {
    double total = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        const double e = cdf(x[k]) - u[k];
        total += w[k] * e * e;
    }
    return static_cast<double>(n) * total;
}

void gl_nodes(std::size_t nodes, std::vector<double>& u, std::vector<double>& w) {
    if (nodes % 8 != 0) {
        throw std::invalid_argument("cvm: node count must be a multiple of 8");
    }
    const std::size_t panels = nodes / 8;
    const double width = 1.0 / static_cast<double>(panels);
    u.clear();
    w.clear();
    u.reserve(nodes);
    w.reserve(nodes);
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = (static_cast<double>(p) + 0.5) * width;
        for (int k = 3; k >= 0; --k) {
            u.push_back(mid - 0.5 * width * kGlX[k]);
            w.push_back(0.5 * width * kGlW[k]);
        }
        for (int k = 0; k < 4; ++k) {
            u.push_back(mid + 0.5 * width * kGlX[k]);
            w.push_back(0.5 * width * kGlW[k]);
        }
    }
}

double cvm_empirical(const Sample& sample, const ReferenceDistribution& null) {
    const auto& x = sample.values();
    const double n = static_cast<double>(x.size());
    double t = 1.0 / (12.0 * n);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = null.cdf(x[i]) - (2.0 * static_cast<double>(i) + 1.0) / (2.0 * n);
        t += e * e;
    }
    return t;
}

}  // namespace

std::string_view stat_family_name(StatFamily family) {
    return family == StatFamily::ks ? "ks" : "cvm";
}

StatFamily parse_stat_family(std::string_view name) {
    if (name == "ks") return StatFamily::ks;
    if (name == "cvm") return StatFamily::cvm;
    throw std::invalid_argument("unknown statistic family: " + std::string(name));
}

NullGrids::NullGrids(const ReferenceDistribution& null, std::size_t ks_points, std::size_t cvm_nodes)
    : ks_points_(ks_points), ks_candidates_(quantile_grid(null, ks_points)) {
    gl_nodes(cvm_nodes, cvm_u_, cvm_w_);
    cvm_x_.reserve(cvm_u_.size());
    for (double u : cvm_u_) cvm_x_.push_back(null.quantile(u));
}

KsResult ks_statistic(const CdfEstimator& estimator, const ReferenceDistribution& null,
                      const KsOptions& options) {
    check_support(estimator, null);
    if (estimator.kind() == EstimatorKind::empirical) return ks_empirical(estimator.sample(), null);
    return ks_scan(extended_cdf(estimator), estimator.sample().values(), null,
                   quantile_grid(null, options.grid_points), options.refine);
}

KsResult ks_statistic(const CdfEstimator& estimator, const ReferenceDistribution& null,
                      const NullGrids& grids, bool refine) {
    check_support(estimator, null);
    if (estimator.kind() == EstimatorKind::empirical) return ks_empirical(estimator.sample(), null);
    return ks_scan(extended_cdf(estimator), estimator.sample().values(), null,
                   grids.ks_candidates(), refine);
}

KsResult ks_statistic_fn(const std::function<double(double)>& cdf,
                         const std::vector<double>& sample_points,
                         const ReferenceDistribution& null, const KsOptions& options) {
    return ks_scan(cdf, sample_points, null, quantile_grid(null, options.grid_points), options.refine);
}

double cvm_statistic(const CdfEstimator& estimator, const ReferenceDistribution& null,
                     std::size_t nodes) {
    check_support(estimator, null);
    if (estimator.kind() == EstimatorKind::empirical) return cvm_empirical(estimator.sample(), null);
    return cvm_statistic_fn(extended_cdf(estimator), estimator.n(), null, nodes);
}

double cvm_statistic(const CdfEstimator& estimator, const ReferenceDistribution& null,
                     const NullGrids& grids) {
    check_support(estimator, null);
    if (estimator.kind() == EstimatorKind::empirical) return cvm_empirical(estimator.sample(), null);
    return cvm_kernel_quadrature(extended_cdf(estimator), estimator.n(), grids.cvm_u(),
                                 grids.cvm_x(), grids.cvm_w());
}

double cvm_statistic_fn(const std::function<double(double)>& cdf, std::size_t n,
                        const ReferenceDistribution& null, std::size_t nodes) {
    std::vector<double> u, w;
    gl_nodes(nodes, u, w);
    std::vector<double> x;
    x.reserve(u.size());
    for (double uk : u) x.push_back(null.quantile(uk));
    return cvm_kernel_quadrature(cdf, n, u, x, w);
}

double ks_scaled_pvalue(double lambda) {
    if (std::isnan(lambda)) throw std::domain_error("ks_pvalue: NaN statistic");
    // Below 0.2 the complementary series puts p within 1e-12 of 1.
    if (lambda < 0.2) return 1.0;
    double p = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 1000; ++k) {
        const double term = std::exp(-2.0 * lambda * lambda * static_cast<double>(k) * k);
        p += sign * term;
        if (term < 1e-12) break;
        sign = -sign;
    }
    return std::clamp(2.0 * p, 0.0, 1.0);
}

double ks_pvalue(double d, std::size_t n) {
    if (d < 0.0 || d > 1.0) throw std::domain_error("ks_pvalue: D must lie in [0,1]");
    return ks_scaled_pvalue(std::sqrt(static_cast<double>(n)) * d);
}

double ks_critical_value(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("ks_critical_value: alpha in (0,1)");
    double lo = 0.2, hi = 5.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (ks_scaled_pvalue(mid) > alpha) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double cvm_pvalue(double t) {
    if (!(t >= 0.0)) throw std::domain_error("cvm_pvalue: statistic must be nonnegative");
    if (t == 0.0) return 1.0;
    // Asymptotic omega^2 CDF (Anderson-Darling/Csorgo-Faraway form):
    //   V(x) = (1/(pi sqrt(x))) sum_j c_j sqrt(4j+1) e^{-z_j} K_{1/4}(z_j),
    // z_j = (4j+1)^2/(16x), c_j = Gamma(j+1/2)/(Gamma(1/2) j!).
    double sum = 0.0;
    double coeff = 1.0;  // c_0
    for (int j = 0; j < 200; ++j) {
        const double a = 4.0 * j + 1.0;
        const double z = a * a / (16.0 * t);
        double term = 0.0;
        if (2.0 * z < 700.0) {  // e^{-2z} underflows past this point
            term = coeff * std::sqrt(a) * std::exp(-2.0 * z) * special::scaled_bessel_k_quarter(z);
        }
        sum += term;
        if (j > 0 && term < 1e-10) break;
        coeff *= (static_cast<double>(j) + 0.5) / (static_cast<double>(j) + 1.0);
    }
    const double cdf = sum / (M_PI * std::sqrt(t));
    return std::clamp(1.0 - cdf, 0.0, 1.0);
}

double cvm_critical_value(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("cvm_critical_value: alpha in (0,1)");
    double lo = 1e-3, hi = 20.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cvm_pvalue(mid) > alpha) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

TestReport make_report(const CdfEstimator& estimator, StatFamily family, double alpha, double stat,
                       double x_star, std::size_t grid_points) {
    TestReport r;
    r.family = family;
    r.estimator = estimator.kind();
    if (estimator.bijection()) r.transform = std::string(estimator.bijection()->name());
    r.n = estimator.n();
    r.statistic = stat;
    r.alpha = alpha;
    r.x_star = x_star;
    r.bandwidth = estimator.kind() == EstimatorKind::empirical ? kNaN : estimator.bandwidth();
    r.grid_points = grid_points;
    if (family == StatFamily::ks) {
        r.scaled_statistic = std::sqrt(static_cast<double>(r.n)) * stat;
        r.p_value = ks_scaled_pvalue(r.scaled_statistic);
        r.critical_value = ks_critical_value(alpha);
    } else {
        r.scaled_statistic = stat;
        r.p_value = cvm_pvalue(stat);
        r.critical_value = cvm_critical_value(alpha);
    }
    r.reject = r.p_value < alpha;
    return r;
}

}  // namespace

TestReport run_test(const CdfEstimator& estimator, const ReferenceDistribution& null,
                    StatFamily family, double alpha, const KsOptions& options) {
    if (family == StatFamily::ks) {
        const KsResult ks = ks_statistic(estimator, null, options);
        return make_report(estimator, family, alpha, ks.statistic, ks.x_star, options.grid_points);
    }
    const double t = cvm_statistic(estimator, null);
    return make_report(estimator, family, alpha, t, kNaN, 512);
}

TestReport run_test(const CdfEstimator& estimator, const ReferenceDistribution& null,
                    StatFamily family, double alpha, const NullGrids& grids) {
    if (family == StatFamily::ks) {
        const KsResult ks = ks_statistic(estimator, null, grids);
        return make_report(estimator, family, alpha, ks.statistic, ks.x_star, grids.ks_points());
    }
    const double t = cvm_statistic(estimator, null, grids);
    return make_report(estimator, family, alpha, t, kNaN, grids.cvm_u().size());
}

double equivalence_gap(const Sample& sample, const ReferenceDistribution& null, const Kernel& kernel,
                       const std::optional<Bijection>& bijection, StatFamily family) {
    const double h = reference_bandwidth(sample, bijection, 0.3);
    const CdfEstimator smooth = bijection
                                    ? CdfEstimator::transformed_kernel(sample, kernel, h, *bijection)
                                    : CdfEstimator::naive_kernel(sample, kernel, h);
    const CdfEstimator classical = CdfEstimator::empirical(sample);
    if (family == StatFamily::ks) {
        return std::abs(ks_statistic(classical, null).statistic - ks_statistic(smooth, null).statistic);
    }
    return std::abs(cvm_statistic(classical, null) - cvm_statistic(smooth, null));
}

}  // namespace gof
