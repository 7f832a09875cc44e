#include "wittforge/charge.hpp"

#include "wittforge/error.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace wittforge {

CentralCharge CentralCharge::from_rational(const Rational& r) {
    CentralCharge c;
    c.value_ = mod(r, Rational(8));
    return c;
}

Integer CentralCharge::additive_order() const {
    // n·c ∈ 8ℤ iff the denominator of c/8 divides n.
    const Rational eighth = value_ / 8;
    return eighth.get_den();
}

CentralCharge charge_add(const CentralCharge& a, const CentralCharge& b) { return a + b; }

CentralCharge charge_scale(const Integer& n, const CentralCharge& c) { return n * c; }

CentralCharge charge_neg(const CentralCharge& c) { return -c; }

CentralCharge charge_from_rational(const Rational& r) { return CentralCharge::from_rational(r); }

ComplexValue gauss_sum(const PreMetricGroup& pm) {
    double re = 0.0;
    double im = 0.0;
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < static_cast<std::size_t>(pm.order()); ++i) {
        const QmodZ v = pm.q_at(i);
        const double angle = two_pi * v.to_double();
        re += std::cos(angle);
        im += std::sin(angle);
    }
    return {re, im};
}

ComplexValue multiplicative_charge(const PreMetricGroup& pm) {
    if (!pm.is_nondegenerate()) {
        fail(ErrorKind::Precondition, "central charge requires a non-degenerate form on " +
                                          pm.group().to_string());
    }
    const ComplexValue xi = gauss_sum(pm) / std::sqrt(static_cast<double>(pm.order()));
    if (!std::isfinite(xi.real()) || !std::isfinite(xi.imag()) || std::abs(std::abs(xi) - 1.0) > 1e-6) {
        fail(ErrorKind::Internal, "normalised Gauss sum has modulus " + std::to_string(std::abs(xi)) +
                                      ", expected 1");
    }
    return xi;
}

CentralCharge additive_charge(const PreMetricGroup& pm) {
    const ComplexValue xi = multiplicative_charge(pm);
    for (std::int64_t c = 0; c < 8; ++c) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(c) / 8.0;
        const ComplexValue root(std::cos(angle), std::sin(angle));
        if (std::abs(xi - root) < 1e-6) {
            return CentralCharge::from_integer(c);
        }
    }
    fail(ErrorKind::Internal, "multiplicative charge is not an 8th root of unity");
}

std::string eighth_root_label(std::int64_t c) {
    static const std::array<const char*, 8> labels = {
        "1", "(1+i)/sqrt2", "i", "(-1+i)/sqrt2", "-1", "(-1-i)/sqrt2", "-i", "(1-i)/sqrt2"};
    return labels.at(static_cast<std::size_t>(((c % 8) + 8) % 8));
}

} // namespace wittforge
