#pragma once

#include <string>
#include <string_view>

namespace gof {

enum class KernelType { gaussian, epanechnikov };

// A symmetric nonnegative kernel density K together with its antiderivative
// W(v) = int_{-inf}^v K and the moment constants that enter the bias/variance
// formulas. Immutable after construction; safe to share across threads.
class Kernel {
public:
    explicit Kernel(KernelType type);

    static Kernel gaussian() { return Kernel(KernelType::gaussian); }
    static Kernel epanechnikov() { return Kernel(KernelType::epanechnikov); }

    KernelType type() const { return type_; }
    std::string_view name() const;

    // K(v). Zero outside the support radius for compact kernels.
    double evaluate(double v) const;

    // W(v) in [0,1]. Throws std::domain_error for non-finite v; infinite
    // arguments are the caller's boundary sentinel and must be resolved
    // before reaching the kernel.
    double integrated(double v) const;

    double second_moment() const { return second_moment_; }    // int v^2 K
    double r1() const { return r1_; }                          // int v K(v) W(v)
    double squared_integral() const { return squared_integral_; }  // int K^2
    double support_radius() const { return support_radius_; }  // +inf for gaussian

private:
    KernelType type_;
    double second_moment_;
    double r1_;
    double squared_integral_;
    double support_radius_;
};

KernelType parse_kernel(std::string_view name);
std::string_view kernel_name(KernelType type);

}  // namespace gof
