#pragma once

#include "wittforge/integer.hpp"
#include "wittforge/qform.hpp"

#include <complex>
#include <cstdint>
#include <string>

namespace wittforge {

/// Additive central charge: an element of ℚ/8ℤ held as its residue in [0, 8).
class CentralCharge {
public:
    CentralCharge() = default;

    static CentralCharge from_rational(const Rational& r);
    static CentralCharge from_integer(std::int64_t n) { return from_rational(Rational(n)); }

    const Rational& value() const noexcept { return value_; }
    bool is_zero() const { return value_ == 0; }

    /// Smallest n >= 1 with n·c = 0 in ℚ/8ℤ.
    Integer additive_order() const;

    std::string to_string() const { return wittforge::to_string(value_); }

    friend CentralCharge operator+(const CentralCharge& a, const CentralCharge& b) {
        return from_rational(a.value_ + b.value_);
    }
    friend CentralCharge operator-(const CentralCharge& a) { return from_rational(-a.value_); }
    friend CentralCharge operator-(const CentralCharge& a, const CentralCharge& b) {
        return from_rational(a.value_ - b.value_);
    }
    friend CentralCharge operator*(const Integer& n, const CentralCharge& c) {
        return from_rational(Rational(n) * c.value_);
    }
    friend bool operator==(const CentralCharge& a, const CentralCharge& b) {
        return a.value_ == b.value_;
    }

private:
    Rational value_{0};
};

CentralCharge charge_add(const CentralCharge& a, const CentralCharge& b);
CentralCharge charge_scale(const Integer& n, const CentralCharge& c);
CentralCharge charge_neg(const CentralCharge& c);
CentralCharge charge_from_rational(const Rational& r);

using ComplexValue = std::complex<double>;

/// Σ_{a ∈ A} e^{2πi q(a)} in double precision.
ComplexValue gauss_sum(const PreMetricGroup& pm);

/// gauss_sum / √|A|. Requires a non-degenerate form; a modulus off by more
/// than 1e-6 from 1 raises an internal error.
ComplexValue multiplicative_charge(const PreMetricGroup& pm);

/// The integer c in [0, 8) with ξ = e^{2πic/8}.
CentralCharge additive_charge(const PreMetricGroup& pm);

/// "1", "(1+i)/sqrt2", "i", ... for c in {0,...,7}.
std::string eighth_root_label(std::int64_t c);

} // namespace wittforge
