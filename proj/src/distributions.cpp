#include "gof/distributions.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "gof/detail/special.hpp"

namespace gof {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

ReferenceDistribution ReferenceDistribution::gamma(double shape, double scale) {
    require(shape > 0.0 && scale > 0.0, "gamma: shape and scale must be positive");
    return ReferenceDistribution(DistFamily::gamma, {shape, scale}, Interval::positive_half_line());
}

ReferenceDistribution ReferenceDistribution::weibull(double shape, double scale) {
    require(shape > 0.0 && scale > 0.0, "weibull: shape and scale must be positive");
    return ReferenceDistribution(DistFamily::weibull, {shape, scale}, Interval::positive_half_line());
}

ReferenceDistribution ReferenceDistribution::lognormal(double mu, double sigma) {
    require(sigma > 0.0, "lognormal: sigma must be positive");
    return ReferenceDistribution(DistFamily::lognormal, {mu, sigma}, Interval::positive_half_line());
}

ReferenceDistribution ReferenceDistribution::absnormal() {
    return ReferenceDistribution(DistFamily::absnormal, {}, Interval::positive_half_line());
}

ReferenceDistribution ReferenceDistribution::uniform(double a, double b) {
    require(a < b, "uniform: need a < b");
    return ReferenceDistribution(DistFamily::uniform, {a, b}, Interval::make(a, b));
}

ReferenceDistribution ReferenceDistribution::beta(double a, double b) {
    require(a > 0.0 && b > 0.0, "beta: parameters must be positive");
    return ReferenceDistribution(DistFamily::beta, {a, b}, Interval::unit());
}

ReferenceDistribution ReferenceDistribution::parse(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string head(spec.substr(0, colon));
    std::vector<double> args;
    if (colon != std::string_view::npos) {
        std::string rest(spec.substr(colon + 1));
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t next = rest.find(',', pos);
            if (next == std::string::npos) next = rest.size();
            try {
                args.push_back(std::stod(rest.substr(pos, next - pos)));
            } catch (const std::exception&) {
                throw std::invalid_argument("distribution spec: bad parameter in '" + std::string(spec) + "'");
            }
            pos = next + 1;
        }
    }
    auto want = [&](std::size_t k) {
        if (args.size() != k) {
            throw std::invalid_argument("distribution spec: '" + head + "' takes " + std::to_string(k) +
                                        " parameters");
        }
    };
    if (head == "gamma") { want(2); return gamma(args[0], args[1]); }
    if (head == "weibull") { want(2); return weibull(args[0], args[1]); }
    if (head == "lognorm") { want(2); return lognormal(args[0], args[1]); }
    if (head == "absnorm") { want(0); return absnormal(); }
    if (head == "uniform") { want(2); return uniform(args[0], args[1]); }
    if (head == "beta") { want(2); return beta(args[0], args[1]); }
    throw std::invalid_argument("unknown distribution family: '" + head + "'");
}

std::string ReferenceDistribution::spec_string() const {
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", v);
        return std::string(buf);
    };
    switch (family_) {
        case DistFamily::gamma: return "gamma:" + fmt(params_[0]) + "," + fmt(params_[1]);
        case DistFamily::weibull: return "weibull:" + fmt(params_[0]) + "," + fmt(params_[1]);
        case DistFamily::lognormal: return "lognorm:" + fmt(params_[0]) + "," + fmt(params_[1]);
        case DistFamily::absnormal: return "absnorm";
        case DistFamily::uniform: return "uniform:" + fmt(params_[0]) + "," + fmt(params_[1]);
        case DistFamily::beta: return "beta:" + fmt(params_[0]) + "," + fmt(params_[1]);
    }
    return "?";
}

double ReferenceDistribution::cdf(double x) const {
    if (x <= support_.lower) return 0.0;
    if (x >= support_.upper) return 1.0;
    switch (family_) {
        case DistFamily::gamma:
            return special::regularized_lower_gamma(params_[0], x / params_[1]);
        case DistFamily::weibull:
            return -std::expm1(-std::pow(x / params_[1], params_[0]));
        case DistFamily::lognormal:
            return special::normal_cdf((std::log(x) - params_[0]) / params_[1]);
        case DistFamily::absnormal:
            return 2.0 * special::normal_cdf(x) - 1.0;
        case DistFamily::uniform:
            return (x - params_[0]) / (params_[1] - params_[0]);
        case DistFamily::beta:
            return special::regularized_incomplete_beta(params_[0], params_[1], x);
    }
    return 0.0;
}

double ReferenceDistribution::pdf(double x) const {
    if (!support_.contains_interior(x)) return 0.0;
    switch (family_) {
        case DistFamily::gamma: {
            const double k = params_[0], theta = params_[1];
            return std::exp((k - 1.0) * std::log(x) - x / theta - std::lgamma(k) - k * std::log(theta));
        }
        case DistFamily::weibull: {
            const double k = params_[0], lambda = params_[1];
            const double t = x / lambda;
            return (k / lambda) * std::pow(t, k - 1.0) * std::exp(-std::pow(t, k));
        }
        case DistFamily::lognormal: {
            const double z = (std::log(x) - params_[0]) / params_[1];
            return special::normal_pdf(z) / (x * params_[1]);
        }
        case DistFamily::absnormal:
            return 2.0 * special::normal_pdf(x);
        case DistFamily::uniform:
            return 1.0 / (params_[1] - params_[0]);
        case DistFamily::beta: {
            const double a = params_[0], b = params_[1];
            return std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) + std::lgamma(a + b) -
                            std::lgamma(a) - std::lgamma(b));
        }
    }
    return 0.0;
}

double ReferenceDistribution::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0)) {
        throw std::domain_error("quantile: u must lie in (0,1)");
    }
    switch (family_) {
        case DistFamily::weibull:
            return params_[1] * std::pow(-std::log1p(-u), 1.0 / params_[0]);
        case DistFamily::lognormal:
            return std::exp(params_[0] + params_[1] * special::inverse_normal_cdf(u));
        case DistFamily::absnormal:
            return special::inverse_normal_cdf(0.5 * (1.0 + u));
        case DistFamily::uniform:
            return params_[0] + (params_[1] - params_[0]) * u;
        case DistFamily::gamma:
        case DistFamily::beta:
            break;
    }

    // Numeric inversion: bisection bracket, then Newton polish.
    double lo, hi;
    if (family_ == DistFamily::beta) {
        lo = 0.0;
        hi = 1.0;
    } else {
        lo = 0.0;
        hi = params_[0] * params_[1] + 1.0;  // start past the mean
        while (cdf(hi) < u) hi *= 2.0;
    }
    for (int i = 0; i < 90; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) < u) lo = mid; else hi = mid;
        if (hi - lo < 1e-14 * (1.0 + hi)) break;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 3; ++i) {
        const double f = pdf(x);
        if (f <= 0.0) break;
        double step = (cdf(x) - u) / f;
        const double next = x - step;
        if (next <= lo || next >= hi) break;
        x = next;
    }
    return x;
}

double ReferenceDistribution::log_density_deriv1(double x) const {
    switch (family_) {
        case DistFamily::gamma:
            return (params_[0] - 1.0) / x - 1.0 / params_[1];
        case DistFamily::weibull: {
            const double k = params_[0], lambda = params_[1];
            return (k - 1.0) / x - (k / lambda) * std::pow(x / lambda, k - 1.0);
        }
        case DistFamily::lognormal:
            return -1.0 / x - (std::log(x) - params_[0]) / (params_[1] * params_[1] * x);
        case DistFamily::absnormal:
            return -x;
        case DistFamily::uniform:
            return 0.0;
        case DistFamily::beta:
            return (params_[0] - 1.0) / x - (params_[1] - 1.0) / (1.0 - x);
    }
    return 0.0;
}

double ReferenceDistribution::log_density_deriv2(double x) const {
    switch (family_) {
        case DistFamily::gamma:
            return -(params_[0] - 1.0) / (x * x);
        case DistFamily::weibull: {
            const double k = params_[0], lambda = params_[1];
            return -(k - 1.0) / (x * x) - (k * (k - 1.0) / (lambda * lambda)) * std::pow(x / lambda, k - 2.0);
        }
        case DistFamily::lognormal: {
            const double s2 = params_[1] * params_[1];
            return 1.0 / (x * x) + (std::log(x) - params_[0] - 1.0) / (s2 * x * x);
        }
        case DistFamily::absnormal:
            return -1.0;
        case DistFamily::uniform:
            return 0.0;
        case DistFamily::beta:
            return -(params_[0] - 1.0) / (x * x) - (params_[1] - 1.0) / ((1.0 - x) * (1.0 - x));
    }
    return 0.0;
}

double ReferenceDistribution::pdf_deriv1(double x) const {
    if (!support_.contains_interior(x)) {
        throw std::domain_error("pdf_deriv1: x must lie strictly inside the support");
    }
    return pdf(x) * log_density_deriv1(x);
}

double ReferenceDistribution::pdf_deriv2(double x) const {
    if (!support_.contains_interior(x)) {
        throw std::domain_error("pdf_deriv2: x must lie strictly inside the support");
    }
    const double l1 = log_density_deriv1(x);
    return pdf(x) * (l1 * l1 + log_density_deriv2(x));
}

double ReferenceDistribution::sample_gamma(SeededRng& rng, double shape) const {
    // Marsaglia-Tsang squeeze; shape < 1 is boosted through shape + 1.
    if (shape < 1.0) {
        const double u = rng.next_uniform();
        return sample_gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.next_uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double ReferenceDistribution::sample(SeededRng& rng) const {
    switch (family_) {
        case DistFamily::gamma:
            return params_[1] * sample_gamma(rng, params_[0]);
        case DistFamily::weibull:
            return params_[1] * std::pow(-std::log1p(-rng.next_uniform()), 1.0 / params_[0]);
        case DistFamily::lognormal:
            return std::exp(params_[0] + params_[1] * rng.next_normal());
        case DistFamily::absnormal:
            return std::abs(rng.next_normal());
        case DistFamily::uniform:
            return params_[0] + (params_[1] - params_[0]) * rng.next_uniform();
        case DistFamily::beta: {
            const double g1 = sample_gamma(rng, params_[0]);
            const double g2 = sample_gamma(rng, params_[1]);
            return g1 / (g1 + g2);
        }
    }
    return 0.0;
}

std::vector<double> ReferenceDistribution::sample(SeededRng& rng, std::size_t n) const {
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample(rng));
    return out;
}

}  // namespace gof
