// Monte Carlo properties of the test statistics: the shrinking gap between
// classical and smoothed statistics, and the power of the smoothed test.

#include <algorithm>
#include <cmath>
#include <doctest.h>

#include "gof/bandwidth.hpp"
#include "gof/detail/parallel.hpp"
#include "gof/statistics.hpp"
#include "oracles.hpp"

using gof::Bijection;
using gof::BijectionType;
using gof::CdfEstimator;
using gof::Interval;
using gof::Kernel;
using gof::ReferenceDistribution;
using gof::Sample;
using gof::SeededRng;
using gof::StatFamily;

namespace {
const Kernel kGauss = Kernel::gaussian();
}

TEST_CASE("equivalence gap shrinks with n for both families") {
    const auto uniform = ReferenceDistribution::uniform(0.0, 1.0);
    const Bijection probit = Bijection::make(BijectionType::probit, Interval::unit());
    const std::size_t sizes[] = {100, 1000};
    double ks_medians[2], cvm_medians[2];
    for (int k = 0; k < 2; ++k) {
        std::vector<double> ks_gaps(60), cvm_gaps(60);
        gof::detail::parallel_for(60, [&](std::size_t seed) {
            SeededRng rng = SeededRng::stream(515, 100 * k + seed);
            const Sample sample(uniform.sample(rng, sizes[k]), uniform.support());
            ks_gaps[seed] = gof::equivalence_gap(sample, uniform, kGauss, probit, StatFamily::ks);
            cvm_gaps[seed] = gof::equivalence_gap(sample, uniform, kGauss, probit, StatFamily::cvm);
        });
        ks_medians[k] = oracle::median(ks_gaps);
        cvm_medians[k] = oracle::median(cvm_gaps);
    }
    CHECK(ks_medians[1] < ks_medians[0]);
    CHECK(cvm_medians[1] < cvm_medians[0]);
}

TEST_CASE("smoothed ks with log transform beats the classical test on weibull vs gamma") {
    // n=50 draws from Weibull(2,2) tested against H0 Gamma(2,2); the
    // boundary-free statistic rejects at least as often as the classical one.
    const auto weibull = ReferenceDistribution::weibull(2.0, 2.0);
    const auto gamma = ReferenceDistribution::gamma(2.0, 2.0);
    const Bijection log_map = Bijection::make(BijectionType::log_exp, weibull.support());
    const gof::NullGrids grids(gamma);
    const std::size_t reps = 1000;

    std::vector<std::uint8_t> classical(reps), smoothed(reps);
    gof::detail::parallel_for(reps, [&](std::size_t r) {
        SeededRng rng = SeededRng::stream(16180, r);
        const Sample sample(weibull.sample(rng, 50), weibull.support());
        const double d_edf =
            gof::ks_statistic(CdfEstimator::empirical(sample), gamma, grids).statistic;
        classical[r] = gof::ks_pvalue(d_edf, 50) < 0.01 ? 1 : 0;
        const double h = gof::select_bandwidth_cdf(sample, kGauss, log_map).h_star;
        const double d_smooth =
            gof::ks_statistic(CdfEstimator::transformed_kernel(sample, kGauss, h, log_map), gamma,
                              grids)
                .statistic;
        smoothed[r] = gof::ks_pvalue(d_smooth, 50) < 0.01 ? 1 : 0;
    });
    std::size_t classical_rejects = 0, smoothed_rejects = 0;
    for (std::size_t r = 0; r < reps; ++r) {
        classical_rejects += classical[r];
        smoothed_rejects += smoothed[r];
    }
    CHECK(smoothed_rejects >= classical_rejects);
    CHECK(smoothed_rejects > reps * 95 / 100);
}
