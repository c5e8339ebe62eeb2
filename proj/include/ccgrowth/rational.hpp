#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ccgrowth {

using BigInt = mpz_class;

std::size_t hash_bigint(const BigInt& z);

// Exact rational scalar.  Invariant: always reduced, denominator positive.
// Equality and hashing are therefore structural.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const BigInt& n) : v_(n) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  static Rational from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Exact integer value; error if not an integer.
  BigInt to_integer() const {
    if (!is_integer()) throw std::domain_error("rational is not an integer");
    return v_.get_num();
  }

  double to_double() const { return v_.get_d(); }

  // Largest integer <= value.
  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }

  Rational operator-() const { return from_mpq(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p/q", or just "p" when the value is an integer.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  std::size_t hash() const {
    std::size_t h = hash_bigint(v_.get_num());
    h ^= hash_bigint(v_.get_den()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

private:
  mpq_class v_;
};

inline std::size_t hash_bigint(const BigInt& z) {
  const auto* p = z.get_mpz_t();
  std::size_t h = 0x9e3779b97f4a7c15ull + static_cast<std::size_t>(mpz_sgn(p));
  for (std::size_t i = 0, n = mpz_size(p); i < n; ++i) {
    h = (h ^ static_cast<std::size_t>(mpz_getlimbn(p, i))) * 1099511628211ull;
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace ccgrowth

template <>
struct std::hash<ccgrowth::Rational> {
  std::size_t operator()(const ccgrowth::Rational& r) const { return r.hash(); }
};

template <>
struct std::hash<ccgrowth::BigInt> {
  std::size_t operator()(const ccgrowth::BigInt& z) const {
    return ccgrowth::hash_bigint(z);
  }
};
