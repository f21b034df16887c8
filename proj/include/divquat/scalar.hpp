#pragma once

#include <atomic>
#include <charconv>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>

namespace divquat {

// Tallies of real scalar operations. Additions and subtractions share one
// counter; squarings and power-of-two scalings are kept apart from general
// multiplications so they can carry their own contracts. Sign changes are
// tracked but never contractual.
struct op_counts {
    std::uint64_t mul = 0;
    std::uint64_t add = 0;  // additions and subtractions
    std::uint64_t square = 0;
    std::uint64_t div = 0;
    std::uint64_t shift = 0;  // multiplications by a power of two
    std::uint64_t neg = 0;    // sign changes

    op_counts& operator+=(const op_counts& o) {
        mul += o.mul;
        add += o.add;
        square += o.square;
        div += o.div;
        shift += o.shift;
        neg += o.neg;
        return *this;
    }
    friend op_counts operator+(op_counts a, const op_counts& b) { return a += b; }
    friend bool operator==(const op_counts&, const op_counts&) = default;

    // Equality on the five contract-bearing counters, ignoring sign changes.
    bool matches_contract(const op_counts& expected) const {
        return mul == expected.mul && add == expected.add &&
               square == expected.square && div == expected.div &&
               shift == expected.shift;
    }
};

// An accumulating op_counts with an identity token. Not internally
// synchronized: one tally per thread, merge afterwards.
class tally {
public:
    tally() : id_(next_id()) {}

    tally(const tally&) = delete;
    tally& operator=(const tally&) = delete;

    op_counts read() const { return counts_; }
    void reset() { counts_ = {}; }
    std::uint64_t id() const { return id_; }
    void absorb(const tally& other) { counts_ += other.counts_; }

private:
    friend class counting_scalar;

    static std::uint64_t next_id() {
        static std::atomic<std::uint64_t> n{0};
        return ++n;
    }

    op_counts counts_{};
    std::uint64_t id_;
};

// binary64 arithmetic that reports every operation to an attached tally.
// Untallied values (constants built from int literals) are allowed; a binary
// operation charges the tally of its left operand, falling back to the right,
// and the result carries that tally onward. Numeric results are bit-for-bit
// those of the same operations on bare double.
class counting_scalar {
public:
    counting_scalar() = default;
    explicit counting_scalar(int v) : value_(v) {}
    counting_scalar(double v, tally& t) : value_(v), tally_(&t) {}

    double value() const { return value_; }
    tally* attached_tally() const { return tally_; }

    friend counting_scalar operator+(const counting_scalar& a, const counting_scalar& b) {
        tally* t = pick(a, b);
        if (t) ++t->counts_.add;
        return counting_scalar(a.value_ + b.value_, t);
    }
    friend counting_scalar operator-(const counting_scalar& a, const counting_scalar& b) {
        tally* t = pick(a, b);
        if (t) ++t->counts_.add;
        return counting_scalar(a.value_ - b.value_, t);
    }
    friend counting_scalar operator*(const counting_scalar& a, const counting_scalar& b) {
        tally* t = pick(a, b);
        if (t) ++t->counts_.mul;
        return counting_scalar(a.value_ * b.value_, t);
    }
    friend counting_scalar operator/(const counting_scalar& a, const counting_scalar& b) {
        tally* t = pick(a, b);
        if (t) ++t->counts_.div;
        return counting_scalar(a.value_ / b.value_, t);
    }
    friend counting_scalar operator-(const counting_scalar& a) {
        if (a.tally_) ++a.tally_->counts_.neg;
        return counting_scalar(-a.value_, a.tally_);
    }
    friend counting_scalar square(const counting_scalar& a) {
        if (a.tally_) ++a.tally_->counts_.square;
        return counting_scalar(a.value_ * a.value_, a.tally_);
    }
    friend counting_scalar pow2_scale(const counting_scalar& a, int k) {
        if (a.tally_) ++a.tally_->counts_.shift;
        return counting_scalar(std::ldexp(a.value_, k), a.tally_);
    }

    // Comparison and classification are free: they are not arithmetic.
    friend bool operator==(const counting_scalar& a, const counting_scalar& b) {
        return a.value_ == b.value_;
    }
    friend bool is_finite(const counting_scalar& a) { return std::isfinite(a.value_); }

private:
    counting_scalar(double v, tally* t) : value_(v), tally_(t) {}

    static tally* pick(const counting_scalar& a, const counting_scalar& b) {
        return a.tally_ ? a.tally_ : b.tally_;
    }

    double value_ = 0.0;
    tally* tally_ = nullptr;
};

inline double square(double x) { return x * x; }

// x * 2^k by exponent adjustment; exact unless the result over/underflows.
inline double pow2_scale(double x, int k) { return std::ldexp(x, k); }

inline bool is_finite(double x) { return std::isfinite(x); }

// Shortest round-trip decimal form.
inline std::string to_text(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

// The capability every kernel is written against. Realizations: double,
// rational (exact), counting_scalar (instrumented binary64).
template <class T>
concept scalar = std::regular<T> && requires(const T a, const T b, int k) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { square(a) } -> std::convertible_to<T>;
    { pow2_scale(a, k) } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    { is_finite(a) } -> std::convertible_to<bool>;
    T(0);
    T(1);
};

static_assert(scalar<double>);
static_assert(scalar<counting_scalar>);

}  // namespace divquat
