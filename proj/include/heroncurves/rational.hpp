#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace heroncurves {

using Integer = mpz_class;

/// Exact arbitrary-precision fraction, the universal scalar of the library.
///
/// Canonical form is an invariant, not a convention: gcd(|num|, den) = 1,
/// den > 0, and zero is 0/1. Every constructor and operator re-establishes
/// it, so equality and ordering are plain structural comparisons.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}    // NOLINT: implicit by design, lets `2*q + 1` read naturally
    Rational(long n) : v_(n) {}   // NOLINT
    Rational(const Integer& n) : v_(n) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Exact serialization: "p/q", or "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow_int(const Rational& base, unsigned e) {
    Rational acc(1), b = base;
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

/// max(|numerator|, denominator) of the canonical form; height of 0 is 1.
inline Integer naive_height(const Rational& r) {
    Integer n = ::abs(r.num());
    Integer d = r.den();
    return n > d ? n : d;
}

inline std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Integer s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return s;
}

/// The nonnegative s with s^2 = r, when r is a square of a rational.
/// Factor-free: a canonical fraction is a square iff numerator and
/// denominator both are (they are coprime).
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    auto sn = integer_sqrt_exact(r.num());
    if (!sn) return std::nullopt;
    auto sd = integer_sqrt_exact(r.den());
    if (!sd) return std::nullopt;
    return Rational(*sn, *sd);
}

inline std::optional<Integer> integer_cbrt_exact(const Integer& n) {
    Integer a = ::abs(n), s;
    int exact = mpz_root(s.get_mpz_t(), a.get_mpz_t(), 3);
    if (!exact) return std::nullopt;
    return n < 0 ? Integer(-s) : s;
}

inline std::optional<Rational> rational_cbrt(const Rational& r) {
    auto cn = integer_cbrt_exact(r.num());
    if (!cn) return std::nullopt;
    auto cd = integer_cbrt_exact(r.den());
    if (!cd) return std::nullopt;
    return Rational(*cn, *cd);
}

/// Parse the exact CLI grammar: "p", "p/q", or a decimal like "0.5"
/// (converted exactly, 0.5 -> 1/2). Sign goes on the front.
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::size_t& k) {
        std::string d;
        while (k < text.size() && text[k] >= '0' && text[k] <= '9') d.push_back(text[k++]);
        return d;
    };
    std::string ipart = digits(i);
    if (ipart.empty()) return std::nullopt;
    if (i == text.size()) {
        Integer n(ipart);
        return Rational(neg ? Integer(-n) : n);
    }
    if (text[i] == '/') {
        std::string dpart = digits(++i);
        if (dpart.empty() || i != text.size()) return std::nullopt;
        Integer den(dpart);
        if (den == 0) return std::nullopt;
        Integer n(ipart);
        return Rational(neg ? Integer(-n) : n, den);
    }
    if (text[i] == '.') {
        std::string fpart = digits(++i);
        if (fpart.empty() || i != text.size()) return std::nullopt;
        Integer scale = 1;
        for (std::size_t k = 0; k < fpart.size(); ++k) scale *= 10;
        Integer n = Integer(ipart) * scale + Integer(fpart);
        return Rational(neg ? Integer(-n) : n, scale);
    }
    return std::nullopt;
}

/// All canonical rationals with naive height <= bound, zero and negatives
/// included, in a fixed deterministic order (by denominator, then numerator).
inline std::vector<Rational> rationals_up_to_height(long bound) {
    std::vector<Rational> out;
    if (bound < 1) return out;
    out.emplace_back(0);
    for (long den = 1; den <= bound; ++den)
        for (long num = -bound; num <= bound; ++num) {
            if (num == 0 || std::gcd(num, den) != 1) continue;
            out.emplace_back(num, den);
        }
    return out;
}

/// Positive canonical rationals with naive height <= bound.
inline std::vector<Rational> positive_rationals_up_to_height(long bound) {
    std::vector<Rational> out;
    for (long den = 1; den <= bound; ++den)
        for (long num = 1; num <= bound; ++num) {
            if (std::gcd(num, den) != 1) continue;
            out.emplace_back(num, den);
        }
    return out;
}

}  // namespace heroncurves
