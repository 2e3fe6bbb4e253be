#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace revmap {

using Rational = mpq_class;

/// Exact element a + b*sqrt(d) of the real quadratic field Q(sqrt d).
///
/// d is a square-free integer >= 2, or 0 for plain rationals. A value whose
/// irrational part vanishes is stored with d = 0, so equality is structural
/// and rationals combine freely with any field. Combining two genuinely
/// irrational values over different d throws context_error.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(int value) : a_(value) {}   // NOLINT(google-explicit-constructor)
    explicit Scalar(Rational value);
    Scalar(long num, long den);
    Scalar(Rational a, Rational b, std::int64_t d);

    /// sqrt(d) itself; d must be square-free and >= 2.
    static Scalar sqrt_of(std::int64_t d);

    const Rational& rational_part() const { return a_; }
    const Rational& irrational_part() const { return b_; }
    std::int64_t radicand() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_integer() const;

    /// -1, 0 or +1, computed exactly.
    int sign() const;
    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    /// Galois conjugate a - b*sqrt(d).
    Scalar conjugate() const;
    /// Field norm a^2 - d*b^2 (rational).
    Rational norm() const;

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    /// Numeric ordering on the real line.
    friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

    double to_double() const;
    /// Canonical text: "p/q", "p/q+r/s*sqrt(d)", "-sqrt(5)", ...
    std::string to_string() const;

private:
    void normalize();
    std::int64_t merged_radicand(const Scalar& rhs) const;

    Rational a_;
    Rational b_;
    std::int64_t d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Parses the canonical text form. When `context` is set, any sqrt(d) must use
/// that d. Throws parse_error (including zero denominators).
Scalar parse_scalar(std::string_view text, std::optional<std::int64_t> context = std::nullopt);

/// Parses "p" or "p/q" with q != 0.
Rational parse_rational(std::string_view text);

/// Writes sqrt(q) for rational q >= 0 as c*sqrt(d) with d square-free.
Scalar sqrt_rational(const Rational& q);

/// True when d >= 2 has no square factor > 1.
bool is_square_free(std::int64_t d);

}  // namespace revmap
