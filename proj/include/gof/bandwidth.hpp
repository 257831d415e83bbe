#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gof/kernels.hpp"
#include "gof/sample.hpp"
#include "gof/transforms.hpp"

namespace gof {

enum class BandwidthTarget { cdf, pdf };

struct BandwidthSelection {
    double h_star = 0.0;
    // (h, CV(h)) over the scan grid, in grid order.
    std::vector<std::pair<double, double>> criterion_values;
    double grid_lo = 0.0;
    double grid_hi = 0.0;
    // False when the grid minimum sits on an endpoint; h_star is then the
    // endpoint itself and callers may want to widen the grid.
    bool interior = true;
    BandwidthTarget target = BandwidthTarget::cdf;
};

struct CvOptions {
    // Grid [lo,hi] = [lo_factor, hi_factor] * s * n^(-1/3) (cdf) or
    // n^(-1/5) (pdf), scanned at grid_size geometric points.
    double grid_lo_factor = 0.05;
    double grid_hi_factor = 3.0;
    std::size_t grid_size = 40;
    // Simpson cells for the criterion integral.
    std::size_t quadrature_cells = 512;
    // Run the cdf criterion on Y = g^{-1}(X) when a bijection is supplied;
    // switching this off selects on the raw data instead.
    bool transform_domain = true;
    // Score the density criterion on the original x scale (weight 1/g' in
    // the transformed integrals). The pure-Y form is available for study,
    // but it is blind to the x-scale blow-up of the transformed estimator
    // near gaussian-map boundaries and can pick h >= 1 there.
    bool pdf_original_scale = true;
};

// Cross-validation bandwidth for the kernel CDF estimator: minimizes
//   CV(h) = (1/n) sum_i int [ I(Y_i <= y) - Fhat_{-i}(y) ]^2 dy
// over [Y_(1) - 3s, Y_(n) + 3s], grid scan plus one golden-section
// refinement of the bracketing triple. Requires n >= 10 and nonzero
// sample variance.
BandwidthSelection select_bandwidth_cdf(const Sample& sample, const Kernel& kernel,
                                        const std::optional<Bijection>& bijection,
                                        const CvOptions& options = {});

// Least-squares CV for the kernel density estimator: minimizes
//   LSCV(h) = int fhat^2 - (2/n) sum_i fhat_{-i}(Y_i).
BandwidthSelection select_bandwidth_pdf(const Sample& sample, const Kernel& kernel,
                                        const std::optional<Bijection>& bijection,
                                        const CvOptions& options = {});

// Deterministic rule h = s * n^(-exponent) with s the standard deviation of
// the (transformed) data. exponent 1/3 is the C3-compatible CDF default;
// 0.3 is the o(n^(-1/4)) regime under which the smoothed and classical
// statistics share their asymptotic law.
double reference_bandwidth(const Sample& sample, const std::optional<Bijection>& bijection,
                           double exponent);

}  // namespace gof
