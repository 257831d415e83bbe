#include "gof/bandwidth.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "gof/estimators.hpp"

namespace gof {

namespace {

// Data in the CV domain plus its summary statistics.
struct CvData {
    std::vector<double> y;  // sorted
    double sd = 0.0;
};

CvData cv_data(const Sample& sample, const std::optional<Bijection>& bijection, bool transform_domain) {
    CvData d;
    if (bijection && transform_domain) {
        d.y.reserve(sample.size());
        for (double x : sample.values()) d.y.push_back(bijection->inverse(x));
        std::sort(d.y.begin(), d.y.end());
    } else {
        d.y = sample.values();
    }
    const double n = static_cast<double>(d.y.size());
    double mean = 0.0;
    for (double v : d.y) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : d.y) ss += (v - mean) * (v - mean);
    d.sd = std::sqrt(ss / (n - 1.0));
    return d;
}

// Integrated squared leave-one-out error for the CDF estimator at one h.
// F_{-i}(y) = (n Fhat(y) - W_i(y)) / (n-1), so one pass over the quadrature
// nodes costs O(n) kernel evaluations each.
double cv_cdf_criterion(const CvData& d, const Kernel& kernel, double h, std::size_t cells) {
    const std::size_t n = d.y.size();
    const double a = d.y.front() - 3.0 * d.sd;
    const double b = d.y.back() + 3.0 * d.sd;
    const double step = (b - a) / static_cast<double>(cells);
    std::vector<double> w(n);

    auto node_value = [&](double y) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = kernel.integrated((y - d.y[i]) / h);
            total += w[i];
        }
        const double fhat_n = total;  // n * Fhat(y)
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double loo = (fhat_n - w[i]) / static_cast<double>(n - 1);
            const double e = (d.y[i] <= y ? 1.0 : 0.0) - loo;
            acc += e * e;
        }
        return acc;
    };

    double sum = node_value(a) + node_value(b);
    for (std::size_t k = 1; k < cells; ++k) {
        sum += node_value(a + step * static_cast<double>(k)) * (k % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * step / 3.0 / static_cast<double>(n);
}

// Least-squares CV criterion for the density estimator at one h. With a
// weight map the criterion is the LSCV of the transformed estimator on the
// original scale: int ftil^2 dx - (2/n) sum ftil_{-i}(X_i), expressed in the
// transformed variable with weight 1/g'(y); without it, the plain LSCV of
// the kernel density on d.y.
double cv_pdf_criterion(const CvData& d, const Kernel& kernel, double h, std::size_t cells,
                        const std::optional<Bijection>& weight_map) {
    const std::size_t n = d.y.size();
    const double nn = static_cast<double>(n);
    // Integration domain covering the kernel tails: exact for compact
    // kernels, 8 sigma for the gaussian.
    const double pad = h * std::min(kernel.support_radius(), 8.0);
    const double a = d.y.front() - pad;
    const double b = d.y.back() + pad;
    const double step = (b - a) / static_cast<double>(cells);

    auto fhat = [&](double y) { return kernel_pdf_sum(d.y, kernel, h, y); };
    auto weight = [&](double y) { return weight_map ? 1.0 / weight_map->d1(y) : 1.0; };
    auto f2w = [&](double y) {
        const double v = fhat(y);
        return v * v * weight(y);
    };
    double sum = f2w(a) + f2w(b);
    for (std::size_t k = 1; k < cells; ++k) {
        sum += f2w(a + step * static_cast<double>(k)) * (k % 2 == 1 ? 4.0 : 2.0);
    }
    const double integral_f2 = sum * step / 3.0;

    const double k0 = kernel.evaluate(0.0);
    double loo_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        loo_sum += weight(d.y[i]) * (nn * fhat(d.y[i]) - k0 / h) / (nn - 1.0);
    }
    return integral_f2 - 2.0 * loo_sum / nn;
}

BandwidthSelection select(const Sample& sample, const Kernel& kernel,
                          const std::optional<Bijection>& bijection, const CvOptions& options,
                          BandwidthTarget target) {
    if (sample.size() < 10) {
        throw std::invalid_argument("bandwidth cv: need at least 10 observations");
    }
    // The density estimator lives on the transformed scale, so its CV always
    // works on Y; transform_domain only steers the cdf criterion.
    const bool transform_data =
        target == BandwidthTarget::pdf ? bijection.has_value() : options.transform_domain;
    const CvData d = cv_data(sample, bijection, transform_data);
    if (!(d.sd > 0.0)) {
        throw std::invalid_argument("bandwidth cv: degenerate sample (zero variance)");
    }
    if (options.grid_size < 3 || !(options.grid_lo_factor > 0.0) ||
        !(options.grid_hi_factor > options.grid_lo_factor)) {
        throw std::invalid_argument("bandwidth cv: bad grid specification");
    }

    const double n = static_cast<double>(sample.size());
    const double rate = target == BandwidthTarget::cdf ? std::pow(n, -1.0 / 3.0) : std::pow(n, -0.2);
    const double lo = options.grid_lo_factor * d.sd * rate;
    const double hi = options.grid_hi_factor * d.sd * rate;

    const std::optional<Bijection> pdf_weight =
        options.pdf_original_scale ? bijection : std::nullopt;
    auto criterion = [&](double h) {
        return target == BandwidthTarget::cdf
                   ? cv_cdf_criterion(d, kernel, h, options.quadrature_cells)
                   : cv_pdf_criterion(d, kernel, h, options.quadrature_cells, pdf_weight);
    };

    BandwidthSelection sel;
    sel.target = target;
    sel.grid_lo = lo;
    sel.grid_hi = hi;
    sel.criterion_values.reserve(options.grid_size);
    const double ratio = hi / lo;
    std::size_t best = 0;
    for (std::size_t j = 0; j < options.grid_size; ++j) {
        const double h = lo * std::pow(ratio, static_cast<double>(j) /
                                                  static_cast<double>(options.grid_size - 1));
        const double value = criterion(h);
        sel.criterion_values.emplace_back(h, value);
        if (value < sel.criterion_values[best].second) best = j;
    }

    sel.interior = best > 0 && best + 1 < options.grid_size;
    if (!sel.interior) {
        sel.h_star = sel.criterion_values[best].first;
        return sel;
    }

    // Golden-section refinement inside the bracketing triple.
    constexpr double kGolden = 0.3819660112501051;  // 2 - golden ratio
    double a = sel.criterion_values[best - 1].first;
    double b = sel.criterion_values[best + 1].first;
    double x1 = a + kGolden * (b - a);
    double x2 = b - kGolden * (b - a);
    double f1 = criterion(x1);
    double f2 = criterion(x2);
    for (int iter = 0; iter < 30 && (b - a) > 1e-4 * sel.criterion_values[best].first; ++iter) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + kGolden * (b - a);
            f1 = criterion(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - kGolden * (b - a);
            f2 = criterion(x2);
        }
    }
    sel.h_star = f1 < f2 ? x1 : x2;
    // The refinement must not do worse than the scan minimum.
    if (std::min(f1, f2) > sel.criterion_values[best].second) {
        sel.h_star = sel.criterion_values[best].first;
    }
    return sel;
}

}  // namespace

BandwidthSelection select_bandwidth_cdf(const Sample& sample, const Kernel& kernel,
                                        const std::optional<Bijection>& bijection,
                                        const CvOptions& options) {
    return select(sample, kernel, bijection, options, BandwidthTarget::cdf);
}

BandwidthSelection select_bandwidth_pdf(const Sample& sample, const Kernel& kernel,
                                        const std::optional<Bijection>& bijection,
                                        const CvOptions& options) {
    return select(sample, kernel, bijection, options, BandwidthTarget::pdf);
}

double reference_bandwidth(const Sample& sample, const std::optional<Bijection>& bijection,
                           double exponent) {
    const CvData d = cv_data(sample, bijection, true);
    if (!(d.sd > 0.0)) {
        throw std::invalid_argument("reference bandwidth: degenerate sample (zero variance)");
    }
    return d.sd * std::pow(static_cast<double>(sample.size()), -exponent);
}

}  // namespace gof
