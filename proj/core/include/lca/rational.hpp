#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lca {

using Integer = mpz_class;

/// Exact rational number, always stored reduced with positive denominator.
/// Thin wrapper over mpq_class that canonicalizes on every entry point, so
/// equality is structural.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                     // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : v_(n) {}           // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);

    /// Parses "a", "-a", "a/b". Throws UsageError on malformed input or zero
    /// denominator.
    static Rational parse(const std::string& text);

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const;

    /// "a" or "a/b", denominator omitted when 1.
    std::string str() const;

  private:
    mpq_class v_;
};

Integer factorial(unsigned n);

/// Generalized binomial coefficient: top may be any integer,
/// binom(top, k) = top (top-1) ... (top-k+1) / k!.
Integer binomial(long top, unsigned k);

}  // namespace lca
