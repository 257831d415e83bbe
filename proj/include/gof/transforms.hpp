#pragma once

#include <string>
#include <string_view>

#include "gof/interval.hpp"

namespace gof {

enum class BijectionType { log_exp, phi_gamma, probit, logit };

// An increasing bijection g: R -> Omega with inverse and first three
// derivatives. Estimation happens on g^{-1}(data); pushing the smooth
// estimate back through g is what pins the CDF to exactly 0/1 at the
// support boundary.
//
// Families:
//   log_exp:   g(y) = L + e^y            on Omega = (L, inf)
//   phi_gamma: g(y) = L - log(1-Phi(y))  on Omega = (L, inf)
//   probit:    g(y) = lo + w*Phi(y)      on Omega = (lo, hi)
//   logit:     g(y) = lo + w*logistic(y) on Omega = (lo, hi)
//
// Immutable after construction; safe to share across threads.
class Bijection {
public:
    static Bijection make(BijectionType type, const Interval& support);

    BijectionType type() const { return type_; }
    std::string_view name() const;
    const Interval& support() const { return support_; }

    // g(y). For probit/logit/phi_gamma, |y| is clamped near 38 so the result
    // stays strictly inside Omega instead of degenerating to a boundary NaN.
    double forward(double y) const;

    // g^{-1}(x) for x in the closure of Omega. Boundary points map to the
    // -inf/+inf sentinel, which downstream CDF evaluation turns into exact
    // 0/1. Throws std::domain_error outside the closure.
    double inverse(double x) const;

    double d1(double y) const;  // g'(y) > 0
    double d2(double y) const;  // g''(y)
    double d3(double y) const;  // g'''(y)

    // g'(g^{-1}(x)) for x strictly inside Omega.
    double d1_at_inverse(double x) const;

private:
    Bijection(BijectionType type, Interval support, double shift, double scale)
        : type_(type), support_(support), shift_(shift), scale_(scale) {}

    BijectionType type_;
    Interval support_;
    double shift_;  // lower endpoint of Omega
    double scale_;  // width of Omega (bounded families), 1 otherwise
};

BijectionType parse_bijection(std::string_view name);  // "log", "phi-gamma", "probit", "logit"
std::string_view bijection_name(BijectionType type);

// log for half-lines (L, inf), probit for bounded supports.
BijectionType auto_bijection(const Interval& support);

}  // namespace gof
