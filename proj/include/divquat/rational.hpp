#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>

#include "divquat/error.hpp"
#include "divquat/scalar.hpp"

namespace divquat {

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator. Arithmetic is exact; this is the substrate for every oracle
// comparison in the test suites.
class rational {
public:
    using backend = boost::multiprecision::cpp_rational;
    using integer = boost::multiprecision::cpp_int;

    rational() = default;
    explicit rational(int v) : v_(v) {}
    rational(long long num, long long den) {
        if (den == 0) throw zero_denominator();
        v_ = backend(integer(num)) / backend(integer(den));
    }
    explicit rational(backend v) : v_(std::move(v)) {}

    integer numerator() const { return boost::multiprecision::numerator(v_); }
    integer denominator() const { return boost::multiprecision::denominator(v_); }
    double to_double() const { return v_.convert_to<double>(); }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(backend(a.v_ + b.v_));
    }
    friend rational operator-(const rational& a, const rational& b) {
        return rational(backend(a.v_ - b.v_));
    }
    friend rational operator*(const rational& a, const rational& b) {
        return rational(backend(a.v_ * b.v_));
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.v_.is_zero()) throw std::domain_error("rational division by zero");
        return rational(backend(a.v_ / b.v_));
    }
    friend rational operator-(const rational& a) { return rational(backend(-a.v_)); }
    friend rational square(const rational& a) { return rational(backend(a.v_ * a.v_)); }

    // Exact multiplication by 2^k.
    friend rational pow2_scale(const rational& a, int k) {
        if (k >= 0) return rational(backend(a.v_ * backend(integer(1) << k)));
        return rational(backend(a.v_ / backend(integer(1) << -k)));
    }

    friend bool is_finite(const rational&) { return true; }
    friend bool operator==(const rational&, const rational&) = default;
    friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ == b.v_) return std::strong_ordering::equal;
        return std::strong_ordering::greater;
    }

    // "a" when the denominator is one, "a/b" otherwise.
    std::string str() const {
        integer den = denominator();
        if (den == 1) return numerator().str();
        return numerator().str() + "/" + den.str();
    }

    // Accepts an integer, an "a/b" fraction, or a finite decimal, each with
    // an optional leading sign.
    static rational parse(std::string_view text);

private:
    backend v_;
};

inline std::string to_text(const rational& a) { return a.str(); }

static_assert(scalar<rational>);

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// Returns magnitude digits and whether a '-' sign was consumed.
inline std::pair<std::string_view, bool> split_sign(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        bool negative = s.front() == '-';
        return {s.substr(1), negative};
    }
    return {s, false};
}

}  // namespace detail

inline rational rational::parse(std::string_view text) {
    if (text.empty()) throw parse_error("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto [num_digits, num_neg] = detail::split_sign(text.substr(0, slash));
        auto [den_digits, den_neg] = detail::split_sign(text.substr(slash + 1));
        if (!detail::all_digits(num_digits) || !detail::all_digits(den_digits))
            throw parse_error("malformed rational literal: " + std::string(text));
        integer num(std::string(num_digits));
        integer den(std::string(den_digits));
        if (den == 0) throw zero_denominator();
        if (num_neg) num = -num;
        if (den_neg) den = -den;
        return rational(backend(num, den));
    }

    auto [digits, negative] = detail::split_sign(text);
    std::string_view int_part = digits;
    std::string_view frac_part;
    if (auto dot = digits.find('.'); dot != std::string_view::npos) {
        int_part = digits.substr(0, dot);
        frac_part = digits.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty())
        throw parse_error("malformed rational literal: " + std::string(text));
    if (!int_part.empty() && !detail::all_digits(int_part))
        throw parse_error("malformed rational literal: " + std::string(text));
    if (!frac_part.empty() && !detail::all_digits(frac_part))
        throw parse_error("malformed rational literal: " + std::string(text));

    integer num = int_part.empty() ? integer(0) : integer(std::string(int_part));
    integer den(1);
    for (char c : frac_part) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    if (negative) num = -num;
    return rational(backend(num, den));
}

}  // namespace divquat
