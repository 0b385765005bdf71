#pragma once
/// @file scalar.hpp
/// Exact arithmetic in ℚ(i, √2) — the coefficient field used everywhere else.
///
/// An ExtScalar stores the value (a_re + a_im·i) + (b_re + b_im·i)·√2 as four
/// reduced rationals.  All operations are exact: intermediates are computed in
/// 128-bit integers and narrowed back to 64 bits, throwing std::overflow_error
/// if a result no longer fits.  Equality is structural, which is sound because
/// every component is reduced immediately after every operation.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>

namespace atlas {

namespace detail {

using int128 = __int128;
using uint128 = unsigned __int128;

inline uint128 unsigned_abs(int128 v) {
    return v < 0 ? -static_cast<uint128>(v) : static_cast<uint128>(v);
}

inline uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Narrow a 128-bit value to 64 bits, throwing on overflow.
inline std::int64_t narrow(int128 v) {
    if (v > static_cast<int128>(std::numeric_limits<std::int64_t>::max()) ||
        v < static_cast<int128>(std::numeric_limits<std::int64_t>::min()))
        throw std::overflow_error("rational arithmetic overflowed 64 bits");
    return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// Reduced rational number p/q with q > 0 and gcd(|p|, q) = 1.
///
/// The reduced form is an invariant: every constructor and operator
/// normalizes, so operator== can compare components directly.
class Rational {
public:
    constexpr Rational() noexcept : num_(0), den_(1) {}
    constexpr Rational(std::int64_t value) noexcept : num_(value), den_(1) {}

    /// General constructor; reduces, throws std::domain_error if denominator is 0.
    Rational(std::int64_t numerator, std::int64_t denominator)
        : Rational(make(numerator, denominator)) {}

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rational operator-() const noexcept {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational abs() const noexcept { return num_ < 0 ? -*this : *this; }

    /// 1/x; throws std::domain_error on x = 0.
    Rational reciprocal() const { return make(den_, num_); }

    friend Rational operator+(const Rational& x, const Rational& y) {
        using detail::int128;
        return make(static_cast<int128>(x.num_) * y.den_ + static_cast<int128>(y.num_) * x.den_,
                    static_cast<int128>(x.den_) * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        using detail::int128;
        return make(static_cast<int128>(x.num_) * y.den_ - static_cast<int128>(y.num_) * x.den_,
                    static_cast<int128>(x.den_) * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        using detail::int128;
        // Cross-cancel first so the reduced product stays small.
        std::int64_t g1 = static_cast<std::int64_t>(
            detail::gcd128(detail::unsigned_abs(x.num_), static_cast<detail::uint128>(y.den_)));
        std::int64_t g2 = static_cast<std::int64_t>(
            detail::gcd128(detail::unsigned_abs(y.num_), static_cast<detail::uint128>(x.den_)));
        return make(static_cast<int128>(x.num_ / g1) * (y.num_ / g2),
                    static_cast<int128>(x.den_ / g2) * (y.den_ / g1));
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("rational division by zero");
        using detail::int128;
        return make(static_cast<int128>(x.num_) * y.den_, static_cast<int128>(x.den_) * y.num_);
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) noexcept {
        using detail::int128;
        int128 lhs = static_cast<int128>(x.num_) * y.den_;
        int128 rhs = static_cast<int128>(y.num_) * x.den_;
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p" when integral, "p/q" otherwise.
    std::string to_string() const;

private:
    static Rational make(detail::int128 numerator, detail::int128 denominator) {
        if (denominator == 0) throw std::domain_error("rational division by zero");
        if (denominator < 0) {
            numerator = -numerator;
            denominator = -denominator;
        }
        if (numerator == 0) return Rational();
        detail::uint128 g =
            detail::gcd128(detail::unsigned_abs(numerator), static_cast<detail::uint128>(denominator));
        Rational r;
        r.num_ = detail::narrow(numerator / static_cast<detail::int128>(g));
        r.den_ = detail::narrow(denominator / static_cast<detail::int128>(g));
        return r;
    }

    std::int64_t num_;
    std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of ℚ(i, √2): (a_re + a_im·i) + (b_re + b_im·i)·√2.
///
/// Plain aggregate — the reduced-form invariant lives entirely inside
/// Rational, so the four components may be read and written freely.
struct ExtScalar {
    Rational a_re{};  ///< rational part
    Rational a_im{};  ///< coefficient of i
    Rational b_re{};  ///< coefficient of √2
    Rational b_im{};  ///< coefficient of i·√2

    constexpr ExtScalar() noexcept = default;
    ExtScalar(std::int64_t value) noexcept : a_re(value) {}
    ExtScalar(const Rational& value) noexcept : a_re(value) {}
    ExtScalar(Rational are, Rational aim, Rational bre, Rational bim) noexcept
        : a_re(are), a_im(aim), b_re(bre), b_im(bim) {}

    static ExtScalar zero() { return ExtScalar(); }
    static ExtScalar one() { return ExtScalar(1); }
    static ExtScalar i() { return ExtScalar(0, 1, 0, 0); }
    static ExtScalar sqrt2() { return ExtScalar(0, 0, 1, 0); }
    static ExtScalar i_sqrt2() { return ExtScalar(0, 0, 0, 1); }
    static ExtScalar half() { return ExtScalar(Rational(1, 2)); }
    /// 1/√2 = (1/2)·√2.
    static ExtScalar inv_sqrt2() { return ExtScalar(0, 0, Rational(1, 2), 0); }
    /// Embedding of ℚ (spec name for the Rational → ExtScalar inclusion).
    static ExtScalar embed(const Rational& q) { return ExtScalar(q); }

    bool is_zero() const noexcept {
        return a_re.is_zero() && a_im.is_zero() && b_re.is_zero() && b_im.is_zero();
    }
    bool is_one() const noexcept { return *this == ExtScalar(1); }
    /// No i components (value lies in ℚ(√2)).
    bool is_real() const noexcept { return a_im.is_zero() && b_im.is_zero(); }
    /// No √2 components (value lies in ℚ(i)).
    bool is_gaussian() const noexcept { return b_re.is_zero() && b_im.is_zero(); }
    bool is_rational() const noexcept { return is_real() && is_gaussian(); }

    /// The value as a Rational; throws std::domain_error if i or √2 parts remain.
    Rational as_rational() const {
        if (!is_rational()) throw std::domain_error("ExtScalar is not rational");
        return a_re;
    }

    /// Complex conjugation: i ↦ −i, √2 fixed.  Ring automorphism, involution.
    ExtScalar conj() const { return ExtScalar(a_re, -a_im, b_re, -b_im); }
    /// Galois conjugation √2 ↦ −√2, i fixed.  Ring automorphism, involution.
    ExtScalar conj_sqrt2() const { return ExtScalar(a_re, a_im, -b_re, -b_im); }

    ExtScalar operator-() const { return ExtScalar(-a_re, -a_im, -b_re, -b_im); }

    friend ExtScalar operator+(const ExtScalar& x, const ExtScalar& y) {
        return ExtScalar(x.a_re + y.a_re, x.a_im + y.a_im, x.b_re + y.b_re, x.b_im + y.b_im);
    }
    friend ExtScalar operator-(const ExtScalar& x, const ExtScalar& y) {
        return ExtScalar(x.a_re - y.a_re, x.a_im - y.a_im, x.b_re - y.b_re, x.b_im - y.b_im);
    }
    /// (A + B√2)(C + D√2) = (AC + 2BD) + (AD + BC)√2 with Gaussian A,B,C,D.
    friend ExtScalar operator*(const ExtScalar& x, const ExtScalar& y) {
        const Rational two(2);
        Rational are = x.a_re * y.a_re - x.a_im * y.a_im + two * (x.b_re * y.b_re - x.b_im * y.b_im);
        Rational aim = x.a_re * y.a_im + x.a_im * y.a_re + two * (x.b_re * y.b_im + x.b_im * y.b_re);
        Rational bre = x.a_re * y.b_re - x.a_im * y.b_im + x.b_re * y.a_re - x.b_im * y.a_im;
        Rational bim = x.a_re * y.b_im + x.a_im * y.b_re + x.b_re * y.a_im + x.b_im * y.a_re;
        return ExtScalar(are, aim, bre, bim);
    }
    friend ExtScalar operator/(const ExtScalar& x, const ExtScalar& y) { return x * y.inverse(); }

    ExtScalar& operator+=(const ExtScalar& y) { return *this = *this + y; }
    ExtScalar& operator-=(const ExtScalar& y) { return *this = *this - y; }
    ExtScalar& operator*=(const ExtScalar& y) { return *this = *this * y; }
    ExtScalar& operator/=(const ExtScalar& y) { return *this = *this / y; }

    friend bool operator==(const ExtScalar&, const ExtScalar&) noexcept = default;

    /// Multiplicative inverse; throws std::domain_error on zero.
    ///
    /// For x = A + B√2 (A, B Gaussian), x·(A − B√2) = A² − 2B² lies in ℚ(i)
    /// and is nonzero when x ≠ 0 (√2 ∉ ℚ(i)), so the problem reduces to a
    /// Gaussian-rational inverse.
    ExtScalar inverse() const;

    /// Product of all four Galois conjugates of x — a rational that is
    /// nonnegative, and zero iff x = 0.  Used as an exact zero/positivity test.
    Rational norm() const;

    /// Canonical human-readable form, e.g. "1/2 - i + (3/2)√2".
    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const ExtScalar& x);

}  // namespace atlas
