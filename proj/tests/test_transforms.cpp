#include "gof/transforms.hpp"

#include <cmath>
#include <doctest.h>

#include "gof/distributions.hpp"
#include "oracles.hpp"

using gof::Bijection;
using gof::BijectionType;
using gof::Interval;

namespace {

const Bijection kLog = Bijection::make(BijectionType::log_exp, Interval::positive_half_line());
const Bijection kPhiGamma = Bijection::make(BijectionType::phi_gamma, Interval::positive_half_line());
const Bijection kProbit = Bijection::make(BijectionType::probit, Interval::unit());
const Bijection kLogit = Bijection::make(BijectionType::logit, Interval::unit());

const Bijection kAll[] = {kLog, kPhiGamma, kProbit, kLogit};

}  // namespace

TEST_CASE("construction and support validation") {
    CHECK(kLog.inverse(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(kProbit.inverse(0.5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(kLogit.forward(0.0) == doctest::Approx(0.5).epsilon(1e-14));

    // Shifted/rescaled supports.
    const Bijection shifted = Bijection::make(BijectionType::log_exp, Interval::make(2.0, INFINITY));
    CHECK(shifted.inverse(3.0) == doctest::Approx(0.0).epsilon(1e-14));
    const Bijection rescaled = Bijection::make(BijectionType::logit, Interval::make(-1.0, 3.0));
    CHECK(rescaled.forward(0.0) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(Bijection::make(BijectionType::log_exp, Interval::unit()), std::invalid_argument);
    CHECK_THROWS_AS(Bijection::make(BijectionType::probit, Interval::positive_half_line()),
                    std::invalid_argument);
    CHECK_THROWS_AS(Interval::make(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("d1_at_inverse") {
    CHECK(kLog.d1_at_inverse(3.0) == 3.0);
    CHECK(kProbit.d1_at_inverse(0.5) == doctest::Approx(0.3989423).epsilon(1e-6));
    CHECK(kLogit.d1_at_inverse(0.5) == doctest::Approx(0.25).epsilon(1e-12));

    // Against a finite difference of forward at the same point.
    for (const auto& b : kAll) {
        const double x = b.support().bounded() ? 0.37 : 1.3;
        const double y = b.inverse(x);
        const double fd = oracle::central_diff([&](double t) { return b.forward(t); }, y, 1e-6);
        CHECK(b.d1_at_inverse(x) == doctest::Approx(fd).epsilon(1e-5));
    }
    CHECK_THROWS_AS((void)kProbit.d1_at_inverse(0.0), std::domain_error);
    CHECK_THROWS_AS((void)kProbit.d1_at_inverse(1.0), std::domain_error);
    CHECK_THROWS_AS((void)kLog.d1_at_inverse(-2.0), std::domain_error);
}

TEST_CASE("round trips") {
    // inverse(forward(y)) over y in [-8, 8]. For the bounded-support maps the
    // upper tail of forward() is a probability whose absolute resolution is
    // ulp(1), so the attainable y-accuracy there is ulp(x)/g'(y); the bound
    // below is 1e-9 wherever that floor permits.
    for (const auto& b : kAll) {
        CAPTURE(b.name());
        for (int i = 0; i <= 64; ++i) {
            const double y = -8.0 + 16.0 * i / 64.0;
            const double x = b.forward(y);
            const double ulp_limit = (std::nextafter(x, INFINITY) - x) / b.d1(y);
            const double tol = std::max(1e-9 * (1.0 + std::abs(y)), 2.0 * ulp_limit);
            CHECK(std::abs(b.inverse(x) - y) <= tol);
        }
    }

    // forward(inverse(x)) across the quantile span of the study
    // distributions on each support family.
    const auto gamma = gof::ReferenceDistribution::gamma(2.0, 2.0);
    const auto beta = gof::ReferenceDistribution::beta(2.0, 2.0);
    for (int i = 1; i < 100; ++i) {
        const double u = 1e-6 + (1.0 - 2e-6) * i / 100.0;
        const double xg = gamma.quantile(u);
        CHECK(kLog.forward(kLog.inverse(xg)) == doctest::Approx(xg).epsilon(1e-9));
        CHECK(kPhiGamma.forward(kPhiGamma.inverse(xg)) == doctest::Approx(xg).epsilon(1e-9));
        const double xb = beta.quantile(u);
        CHECK(kProbit.forward(kProbit.inverse(xb)) == doctest::Approx(xb).epsilon(1e-9));
        CHECK(kLogit.forward(kLogit.inverse(xb)) == doctest::Approx(xb).epsilon(1e-9));
    }
}

TEST_CASE("boundary sentinels and overflow clamps") {
    CHECK(kLog.inverse(0.0) == -INFINITY);
    CHECK(kProbit.inverse(0.0) == -INFINITY);
    CHECK(kProbit.inverse(1.0) == INFINITY);
    CHECK_THROWS_AS((void)kProbit.inverse(1.5), std::domain_error);
    CHECK_THROWS_AS((void)kLog.inverse(-0.1), std::domain_error);

    // Far-tail forward values stay strictly inside the open support.
    for (const auto& b : {kProbit, kLogit}) {
        CAPTURE(b.name());
        CHECK(b.forward(100.0) < 1.0);
        CHECK(b.forward(100.0) > 0.99);
        CHECK(b.forward(-100.0) > 0.0);
        CHECK(b.forward(-100.0) < 0.01);
    }
    CHECK(kPhiGamma.forward(-100.0) > 0.0);
    CHECK(std::isfinite(kPhiGamma.forward(100.0)));
}

TEST_CASE("monotonicity of forward") {
    for (const auto& b : kAll) {
        CAPTURE(b.name());
        // Strict increase over the resolution-honest window, nondecreasing
        // out to the saturated far tails.
        double prev = b.forward(-8.0);
        for (int i = 1; i <= 200; ++i) {
            const double y = -8.0 + 16.0 * i / 200.0;
            const double x = b.forward(y);
            CHECK(x > prev);
            CHECK(b.d1(y) > 0.0);
            prev = x;
        }
        prev = b.forward(-30.0);
        for (int i = 1; i <= 200; ++i) {
            const double x = b.forward(-30.0 + 60.0 * i / 200.0);
            CHECK(x >= prev);
            prev = x;
        }
    }
}

TEST_CASE("derivatives match finite differences") {
    for (const auto& b : kAll) {
        CAPTURE(b.name());
        for (int i = 0; i <= 40; ++i) {
            const double y = -4.0 + 8.0 * i / 40.0;
            const double fd1 = oracle::central_diff([&](double t) { return b.forward(t); }, y, 1e-6);
            CHECK(b.d1(y) == doctest::Approx(fd1).epsilon(1e-5));
            const double fd2 = oracle::central_diff([&](double t) { return b.d1(t); }, y, 1e-6);
            CHECK(b.d2(y) == doctest::Approx(fd2).epsilon(1e-5));
            const double fd3 = oracle::central_diff([&](double t) { return b.d2(t); }, y, 1e-5);
            CHECK(b.d3(y) == doctest::Approx(fd3).epsilon(1e-4));
        }
    }
}

TEST_CASE("auto transform selection") {
    CHECK(gof::auto_bijection(Interval::positive_half_line()) == BijectionType::log_exp);
    CHECK(gof::auto_bijection(Interval::unit()) == BijectionType::probit);
    CHECK_THROWS_AS(gof::auto_bijection(Interval::real_line()), std::invalid_argument);
}

TEST_CASE("transform parsing") {
    CHECK(gof::parse_bijection("log") == BijectionType::log_exp);
    CHECK(gof::parse_bijection("phi-gamma") == BijectionType::phi_gamma);
    CHECK(gof::parse_bijection("probit") == BijectionType::probit);
    CHECK(gof::parse_bijection("logit") == BijectionType::logit);
    CHECK_THROWS_AS(gof::parse_bijection("arcsinh"), std::invalid_argument);
}
