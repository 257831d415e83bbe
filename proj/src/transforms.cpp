#include "gof/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gof/detail/special.hpp"

namespace gof {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Beyond |y| ~ 38, Phi(y) is within 1e-300 of 0/1; the logit saturates to
// exactly 0/1 in double a little earlier, so it clamps at 37.
constexpr double kNormalClamp = 38.0;
constexpr double kLogisticClamp = 37.0;

double logistic(double y) { return 1.0 / (1.0 + std::exp(-y)); }

// Normal hazard phi(y) / (1 - Phi(y)). Both factors stay representable up to
// |y| ~ 37; the clamp keeps the ratio finite in the far tail.
double normal_hazard(double y) {
    y = std::clamp(y, -37.0, 37.0);
    return special::normal_pdf(y) / special::normal_sf(y);
}

}  // namespace

Bijection Bijection::make(BijectionType type, const Interval& support) {
    if (!(support.lower < support.upper)) {
        throw std::invalid_argument("bijection: degenerate support interval");
    }
    switch (type) {
        case BijectionType::log_exp:
        case BijectionType::phi_gamma:
            if (!support.bounded_below() || support.bounded_above()) {
                throw std::invalid_argument("bijection: log/phi-gamma require a half-line support (L, inf)");
            }
            return Bijection(type, support, support.lower, 1.0);
        case BijectionType::probit:
        case BijectionType::logit:
            if (!support.bounded()) {
                throw std::invalid_argument("bijection: probit/logit require a bounded support");
            }
            return Bijection(type, support, support.lower, support.width());
    }
    throw std::invalid_argument("bijection: unknown type");
}

std::string_view Bijection::name() const { return bijection_name(type_); }

double Bijection::forward(double y) const {
    double x = 0.0;
    switch (type_) {
        case BijectionType::log_exp:
            x = shift_ + std::exp(y);
            break;
        case BijectionType::phi_gamma: {
            y = std::clamp(y, -kNormalClamp, kNormalClamp);
            // -log(1 - Phi(y)), branched so both tails keep full precision.
            x = shift_ + (y <= 0.0 ? -std::log1p(-special::normal_cdf(y))
                                   : -std::log(special::normal_sf(y)));
            break;
        }
        case BijectionType::probit:
            y = std::clamp(y, -kNormalClamp, kNormalClamp);
            x = shift_ + scale_ * special::normal_cdf(y);
            break;
        case BijectionType::logit:
            y = std::clamp(y, -kLogisticClamp, kLogisticClamp);
            x = shift_ + scale_ * logistic(y);
            break;
    }
    // Far-tail arguments can round onto the boundary; nudge to the adjacent
    // representable interior value so forward always lands strictly in Omega.
    if (x <= support_.lower) x = std::nextafter(support_.lower, support_.upper);
    if (x >= support_.upper) x = std::nextafter(support_.upper, support_.lower);
    return x;
}

double Bijection::inverse(double x) const {
    if (!support_.contains_closure(x)) {
        throw std::domain_error("bijection inverse: argument outside the closure of the support");
    }
    if (x == support_.lower) return -kInf;
    if (x == support_.upper) return kInf;
    switch (type_) {
        case BijectionType::log_exp:
            return std::log(x - shift_);
        case BijectionType::phi_gamma: {
            const double u = x - shift_;
            // Phi^{-1}(1 - e^{-u}); evaluate through whichever tail is
            // representable.
            if (u < M_LN2) return special::inverse_normal_cdf(-std::expm1(-u));
            return -special::inverse_normal_cdf(std::exp(-u));
        }
        case BijectionType::probit:
            return special::inverse_normal_cdf((x - shift_) / scale_);
        case BijectionType::logit: {
            const double u = (x - shift_) / scale_;
            return std::log(u) - std::log1p(-u);
        }
    }
    return 0.0;
}

double Bijection::d1(double y) const {
    switch (type_) {
        case BijectionType::log_exp:
            return std::exp(y);
        case BijectionType::phi_gamma:
            return normal_hazard(y);
        case BijectionType::probit:
            return scale_ * special::normal_pdf(y);
        case BijectionType::logit: {
            const double s = logistic(y);
            return scale_ * s * (1.0 - s);
        }
    }
    return 0.0;
}

double Bijection::d2(double y) const {
    switch (type_) {
        case BijectionType::log_exp:
            return std::exp(y);
        case BijectionType::phi_gamma: {
            const double lambda = normal_hazard(y);
            return lambda * (lambda - y);
        }
        case BijectionType::probit:
            return -scale_ * y * special::normal_pdf(y);
        case BijectionType::logit: {
            const double s = logistic(y);
            return scale_ * s * (1.0 - s) * (1.0 - 2.0 * s);
        }
    }
    return 0.0;
}

double Bijection::d3(double y) const {
    switch (type_) {
        case BijectionType::log_exp:
            return std::exp(y);
        case BijectionType::phi_gamma: {
            // g'' = g'(g' - y)  =>  g''' = g''(2g' - y) - g'.
            const double lambda = normal_hazard(y);
            const double dd = lambda * (lambda - y);
            return dd * (2.0 * lambda - y) - lambda;
        }
        case BijectionType::probit:
            return scale_ * (y * y - 1.0) * special::normal_pdf(y);
        case BijectionType::logit: {
            const double s = logistic(y);
            return scale_ * s * (1.0 - s) * (1.0 - 6.0 * s + 6.0 * s * s);
        }
    }
    return 0.0;
}

double Bijection::d1_at_inverse(double x) const {
    if (!support_.contains_interior(x)) {
        throw std::domain_error("d1_at_inverse: argument must lie strictly inside the support");
    }
    // For the exponential map, g'(g^{-1}(x)) = x - L exactly.
    if (type_ == BijectionType::log_exp) return x - shift_;
    return d1(inverse(x));
}

BijectionType parse_bijection(std::string_view name) {
    if (name == "log" || name == "log-exp") return BijectionType::log_exp;
    if (name == "phi-gamma") return BijectionType::phi_gamma;
    if (name == "probit") return BijectionType::probit;
    if (name == "logit") return BijectionType::logit;
    throw std::invalid_argument("unknown transform: " + std::string(name));
}

std::string_view bijection_name(BijectionType type) {
    switch (type) {
        case BijectionType::log_exp: return "log";
        case BijectionType::phi_gamma: return "phi-gamma";
        case BijectionType::probit: return "probit";
        case BijectionType::logit: return "logit";
    }
    return "?";
}

BijectionType auto_bijection(const Interval& support) {
    if (support.bounded()) return BijectionType::probit;
    if (support.bounded_below() && !support.bounded_above()) return BijectionType::log_exp;
    throw std::invalid_argument("auto transform: support must be a half-line (L, inf) or bounded");
}

}  // namespace gof
