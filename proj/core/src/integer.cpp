#include "wittforge/integer.hpp"

#include "wittforge/error.hpp"

#include <cctype>

namespace wittforge {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidGroup: return "invalid-group";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::NotQuadraticForm: return "not-a-quadratic-form";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Argument: return "argument";
    case ErrorKind::UnsupportedSymbol: return "unsupported-symbol";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::InconsistentRing: return "inconsistent-ring";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' ||
        den[0] == '+') {
        fail(ErrorKind::Parse, "expected a fraction p/q, got '" + std::string(text) + "'");
    }
    if (num[0] == '+') {
        num.remove_prefix(1);
    }
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) {
        fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational mod(const Rational& r, const Rational& m) {
    Rational q = r / m;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational out = r - Rational(fl) * m;
    out.canonicalize();
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        fail(ErrorKind::TooLarge, "64-bit overflow in group-order arithmetic");
    }
    return out;
}

} // namespace wittforge
