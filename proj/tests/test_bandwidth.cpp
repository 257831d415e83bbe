#include "gof/bandwidth.hpp"

#include <cmath>
#include <doctest.h>

#include "gof/estimators.hpp"
#include "oracles.hpp"

using gof::BandwidthSelection;
using gof::Bijection;
using gof::BijectionType;
using gof::CdfEstimator;
using gof::Interval;
using gof::Kernel;
using gof::ReferenceDistribution;
using gof::Sample;
using gof::SeededRng;

namespace {
const Kernel kGauss = Kernel::gaussian();
}

TEST_CASE("preconditions") {
    const auto uniform = ReferenceDistribution::uniform(0.0, 1.0);
    SeededRng rng(1);
    CHECK_THROWS_AS(gof::select_bandwidth_cdf(Sample(uniform.sample(rng, 5), uniform.support()),
                                              kGauss, std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        gof::select_bandwidth_cdf(Sample(std::vector<double>(12, 0.5), Interval::unit()), kGauss,
                                  std::nullopt),
        std::invalid_argument);
}

TEST_CASE("scaling equivariance without transform") {
    SeededRng rng(8);
    const auto gamma = ReferenceDistribution::gamma(2.0, 2.0);
    const std::vector<double> base = gamma.sample(rng, 60);
    const double c = 3.7;
    std::vector<double> scaled;
    for (double v : base) scaled.push_back(c * v);

    const auto sel1 = gof::select_bandwidth_cdf(Sample(base, gamma.support()), kGauss, std::nullopt);
    const auto sel2 = gof::select_bandwidth_cdf(Sample(scaled, gamma.support()), kGauss, std::nullopt);
    // One geometric grid step is a factor (3/0.05)^(1/39).
    const double step = std::pow(3.0 / 0.05, 1.0 / 39.0);
    CHECK(sel2.h_star / (c * sel1.h_star) < step);
    CHECK(sel2.h_star / (c * sel1.h_star) > 1.0 / step);
}

TEST_CASE("uniform data with probit transform: interior minimum, mostly unimodal") {
    const auto uniform = ReferenceDistribution::uniform(0.0, 1.0);
    const Bijection probit = Bijection::make(BijectionType::probit, Interval::unit());
    int interior = 0, unimodal = 0;
    for (int seed = 0; seed < 50; ++seed) {
        SeededRng rng = SeededRng::stream(2024, seed);
        const Sample sample(uniform.sample(rng, 50), uniform.support());
        const BandwidthSelection sel = gof::select_bandwidth_cdf(sample, kGauss, probit);
        if (sel.interior) ++interior;
        int local_minima = 0;
        const auto& cv = sel.criterion_values;
        for (std::size_t j = 1; j + 1 < cv.size(); ++j) {
            if (cv[j].second < cv[j - 1].second && cv[j].second <= cv[j + 1].second) ++local_minima;
        }
        if (local_minima == 1) ++unimodal;
    }
    CHECK(interior >= 45);
    CHECK(unimodal >= 45);
}

TEST_CASE("doubling the sample shrinks the bandwidth (stochastic)") {
    const auto gamma = ReferenceDistribution::gamma(2.0, 2.0);
    int shrunk = 0;
    for (int seed = 0; seed < 50; ++seed) {
        SeededRng rng = SeededRng::stream(77, seed);
        const std::vector<double> base = gamma.sample(rng, 40);
        std::vector<double> doubled = base;
        doubled.insert(doubled.end(), base.begin(), base.end());
        const auto h1 =
            gof::select_bandwidth_cdf(Sample(base, gamma.support()), kGauss, std::nullopt).h_star;
        const auto h2 =
            gof::select_bandwidth_cdf(Sample(doubled, gamma.support()), kGauss, std::nullopt).h_star;
        if (h2 <= h1) ++shrunk;
    }
    CHECK(shrunk >= 45);
}

TEST_CASE("leave-one-out identity") {
    // Recomputing Fhat without observation i equals (n Fhat - W_i)/(n-1).
    SeededRng rng(5);
    const auto gamma = ReferenceDistribution::gamma(2.0, 2.0);
    const std::vector<double> data = gamma.sample(rng, 25);
    const Sample sample(data, gamma.support());
    const double h = 0.45;
    const CdfEstimator full = CdfEstimator::naive_kernel(sample, kGauss, h);
    const double n = 25.0;
    for (std::size_t i = 0; i < data.size(); i += 5) {
        std::vector<double> rest;
        for (std::size_t j = 0; j < data.size(); ++j) {
            if (j != i) rest.push_back(data[j]);
        }
        const CdfEstimator loo = CdfEstimator::naive_kernel(Sample(rest, gamma.support()), kGauss, h);
        for (double y : {0.7, 2.0, 4.4, 9.0}) {
            const double identity = (n * full.cdf(y) - kGauss.integrated((y - data[i]) / h)) / (n - 1.0);
            CHECK(loo.cdf(y) == doctest::Approx(identity).epsilon(1e-12));
        }
    }
}

TEST_CASE("selected h respects the C3-derived grid bounds") {
    const auto dists = {ReferenceDistribution::gamma(2.0, 2.0), ReferenceDistribution::beta(2.0, 2.0)};
    for (const auto& d : dists) {
        for (int seed = 0; seed < 10; ++seed) {
            SeededRng rng = SeededRng::stream(31, seed);
            const Sample sample(d.sample(rng, 80), d.support());
            const auto cdf_sel = gof::select_bandwidth_cdf(sample, kGauss, std::nullopt);
            CHECK(cdf_sel.h_star >= cdf_sel.grid_lo);
            CHECK(cdf_sel.h_star <= cdf_sel.grid_hi);
            const double s = sample.stddev();
            CHECK(cdf_sel.grid_lo == doctest::Approx(0.05 * s * std::pow(80.0, -1.0 / 3.0)));
            CHECK(cdf_sel.grid_hi == doctest::Approx(3.0 * s * std::pow(80.0, -1.0 / 3.0)));

            const auto pdf_sel = gof::select_bandwidth_pdf(sample, kGauss, std::nullopt);
            CHECK(pdf_sel.grid_lo == doctest::Approx(0.05 * s * std::pow(80.0, -0.2)));
            CHECK(pdf_sel.h_star >= pdf_sel.grid_lo);
            CHECK(pdf_sel.h_star <= pdf_sel.grid_hi);
        }
    }
}

TEST_CASE("pdf cross-validation picks a sane bandwidth") {
    // LSCV should land well inside the grid and produce a decent density fit
    // for a smooth target.
    const auto beta = ReferenceDistribution::beta(2.0, 2.0);
    const Bijection logit = Bijection::make(BijectionType::logit, Interval::unit());
    int interior = 0;
    for (int seed = 0; seed < 20; ++seed) {
        SeededRng rng = SeededRng::stream(91, seed);
        const Sample sample(beta.sample(rng, 80), beta.support());
        const auto sel = gof::select_bandwidth_pdf(sample, kGauss, logit);
        if (sel.interior) ++interior;
    }
    CHECK(interior >= 15);
}

TEST_CASE("deterministic reference rule") {
    SeededRng rng(12);
    const auto gamma = ReferenceDistribution::gamma(2.0, 2.0);
    const Sample sample(gamma.sample(rng, 100), gamma.support());

    // Without transform: s is the raw standard deviation.
    const double h_raw = gof::reference_bandwidth(sample, std::nullopt, 1.0 / 3.0);
    CHECK(h_raw == doctest::Approx(sample.stddev() * std::pow(100.0, -1.0 / 3.0)).epsilon(1e-12));

    // With the log map: s is the standard deviation of the transformed data.
    const Bijection log_map = Bijection::make(BijectionType::log_exp, gamma.support());
    std::vector<double> y;
    for (double x : sample.values()) y.push_back(std::log(x));
    const double mean = oracle::mean(y);
    double ss = 0.0;
    for (double v : y) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (y.size() - 1.0));
    const double h_log = gof::reference_bandwidth(sample, log_map, 0.3);
    CHECK(h_log == doctest::Approx(sd * std::pow(100.0, -0.3)).epsilon(1e-12));
}
