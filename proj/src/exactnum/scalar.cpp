#include "revmap/scalar.hpp"

#include <cctype>
#include <cmath>
#include <vector>
#include <ostream>
#include <sstream>

#include "revmap/errors.hpp"

namespace revmap {

namespace {

std::string rational_text(const Rational& q) {
    return q.get_str();
}

// Largest s with s*s dividing n, together with n / (s*s).
std::pair<mpz_class, mpz_class> split_square(mpz_class n) {
    mpz_class square = 1;
    mpz_class rest = 1;
    for (mpz_class p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int exponent = 0;
        while (n % p == 0) {
            n /= p;
            ++exponent;
        }
        for (int i = 0; i < exponent / 2; ++i) square *= p;
        if (exponent % 2 == 1) rest *= p;
    }
    rest *= n;
    return {square, rest};
}

}  // namespace

bool is_square_free(std::int64_t d) {
    if (d < 2) return false;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

Scalar::Scalar(Rational value) : a_(std::move(value)) {
    a_.canonicalize();
}

Scalar::Scalar(long num, long den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    a_ = Rational(num, den);
    a_.canonicalize();
}

Scalar::Scalar(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    if (sgn(b_) != 0 && !is_square_free(d_)) {
        throw context_error("Scalar: radicand " + std::to_string(d_) + " is not a square-free integer >= 2");
    }
    normalize();
}

Scalar Scalar::sqrt_of(std::int64_t d) {
    return Scalar(Rational(0), Rational(1), d);
}

void Scalar::normalize() {
    if (sgn(b_) == 0) d_ = 0;
}

bool Scalar::is_integer() const {
    return is_rational() && a_.get_den() == 1;
}

std::int64_t Scalar::merged_radicand(const Scalar& rhs) const {
    if (d_ == 0) return rhs.d_;
    if (rhs.d_ == 0 || rhs.d_ == d_) return d_;
    throw context_error("Scalar: mixing Q(sqrt " + std::to_string(d_) + ") with Q(sqrt " +
                        std::to_string(rhs.d_) + ")");
}

int Scalar::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 with d*b^2; equality is impossible for square-free d.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * d_;
    return lhs > rhs ? sa : sb;
}

Scalar Scalar::conjugate() const {
    Scalar out = *this;
    out.b_ = -out.b_;
    return out;
}

Rational Scalar::norm() const {
    return a_ * a_ - b_ * b_ * d_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (is_rational()) return Scalar(Rational(1 / a_));
    const Rational n = norm();
    Scalar out;
    out.a_ = a_ / n;
    out.b_ = -b_ / n;
    out.d_ = d_;
    out.normalize();
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    const std::int64_t d = merged_radicand(rhs);
    a_ += rhs.a_;
    if (sgn(rhs.b_) != 0) b_ += rhs.b_;
    d_ = d;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    const std::int64_t d = merged_radicand(rhs);
    a_ -= rhs.a_;
    if (sgn(rhs.b_) != 0) b_ -= rhs.b_;
    d_ = d;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    const std::int64_t d = merged_radicand(rhs);
    if (is_rational() && rhs.is_rational()) {
        a_ *= rhs.a_;
        return *this;
    }
    if (rhs.is_rational()) {
        a_ *= rhs.a_;
        b_ *= rhs.a_;
    } else if (is_rational()) {
        b_ = a_ * rhs.b_;
        a_ *= rhs.a_;
    } else {
        Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d;
        Rational b = a_ * rhs.b_ + b_ * rhs.a_;
        a_ = std::move(a);
        b_ = std::move(b);
    }
    d_ = d;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_rational()) {
        if (sgn(rhs.a_) == 0) throw std::domain_error("Scalar: division by zero");
        merged_radicand(rhs);
        a_ /= rhs.a_;
        b_ /= rhs.a_;
        normalize();
        return *this;
    }
    return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.a_ = -out.a_;
    out.b_ = -out.b_;
    return out;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double Scalar::to_double() const {
    double value = a_.get_d();
    if (d_ != 0) value += b_.get_d() * std::sqrt(static_cast<double>(d_));
    return value;
}

std::string Scalar::to_string() const {
    if (is_rational()) return rational_text(a_);
    std::string out;
    if (sgn(a_) != 0) out = rational_text(a_);
    std::string coeff;
    if (b_ == 1) {
        coeff = out.empty() ? "" : "+";
    } else if (b_ == -1) {
        coeff = "-";
    } else {
        coeff = (sgn(b_) > 0 && !out.empty() ? "+" : "") + rational_text(b_) + "*";
    }
    return out + coeff + "sqrt(" + std::to_string(d_) + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
    return os << x.to_string();
}

Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw parse_error("malformed rational '" + std::string(text) + "'");
    const mpz_class n{std::string(num)};
    const mpz_class q{std::string(den)};
    if (q == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    Rational out(negative ? mpz_class(-n) : n, q);
    out.canonicalize();
    return out;
}

Scalar parse_scalar(std::string_view text, std::optional<std::int64_t> context) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw parse_error("empty scalar");

    // Split into signed terms at '+'/'-' that are not the leading sign.
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '(') {
            terms.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    terms.push_back(s.substr(start));
    if (terms.size() > 2) throw parse_error("too many terms in scalar '" + s + "'");

    Rational a;
    Rational b;
    std::int64_t d = 0;
    bool have_rational = false;
    bool have_radical = false;
    for (const std::string& term : terms) {
        const auto pos = term.find("sqrt(");
        if (pos == std::string::npos) {
            if (have_rational) throw parse_error("duplicate rational term in '" + s + "'");
            a = parse_rational(term);
            have_rational = true;
            continue;
        }
        if (have_radical) throw parse_error("duplicate sqrt term in '" + s + "'");
        if (term.back() != ')') throw parse_error("unterminated sqrt in '" + s + "'");
        const std::string radicand = term.substr(pos + 5, term.size() - pos - 6);
        std::string coeff = term.substr(0, pos);
        if (!coeff.empty() && coeff.back() == '*') {
            coeff.pop_back();
            if (coeff == "+" || coeff == "-" || coeff.empty()) throw parse_error("malformed coefficient in '" + s + "'");
        }
        if (coeff.empty() || coeff == "+") {
            b = 1;
        } else if (coeff == "-") {
            b = -1;
        } else {
            b = parse_rational(coeff);
        }
        const Rational dq = parse_rational(radicand);
        if (dq.get_den() != 1 || !dq.get_num().fits_slong_p()) {
            throw parse_error("radicand must be a machine integer in '" + s + "'");
        }
        d = dq.get_num().get_si();
        if (!is_square_free(d)) throw parse_error("radicand " + std::to_string(d) + " is not square-free");
        if (context && *context != d) {
            throw parse_error("sqrt(" + std::to_string(d) + ") does not match scalar context " +
                              std::to_string(*context));
        }
        have_radical = true;
    }
    return Scalar(a, b, d);
}

Scalar sqrt_rational(const Rational& q) {
    if (sgn(q) < 0) throw std::domain_error("sqrt_rational: negative argument");
    if (sgn(q) == 0) return Scalar();
    // sqrt(p/r) = sqrt(p*r)/r
    const mpz_class product = q.get_num() * q.get_den();
    const auto [square, rest] = split_square(product);
    Rational coeff(square, q.get_den());
    coeff.canonicalize();
    if (rest == 1) return Scalar(coeff);
    if (!rest.fits_slong_p()) throw std::overflow_error("sqrt_rational: radicand too large");
    return Scalar(Rational(0), coeff, rest.get_si());
}

}  // namespace revmap
