#pragma once

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>

namespace permstat {

/// Arbitrary-precision signed integer. Thin value wrapper around GMP;
/// immutable in spirit: every operation returns a fresh value.
class ExactInt {
 public:
  ExactInt() : v_(0) {}
  ExactInt(int v) : v_(v) {}
  ExactInt(long v) : v_(v) {}
  ExactInt(unsigned long v) : v_(v) {}
  explicit ExactInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses a decimal string (optional leading '-').
  /// Throws std::invalid_argument on malformed input.
  explicit ExactInt(const std::string& decimal);

  const mpz_class& raw() const { return v_; }

  std::string str() const { return v_.get_str(); }
  int sign() const { return sgn(v_); }

  ExactInt operator-() const { return ExactInt(mpz_class(-v_)); }
  ExactInt operator+(const ExactInt& o) const { return ExactInt(mpz_class(v_ + o.v_)); }
  ExactInt operator-(const ExactInt& o) const { return ExactInt(mpz_class(v_ - o.v_)); }
  ExactInt operator*(const ExactInt& o) const { return ExactInt(mpz_class(v_ * o.v_)); }

  bool operator==(const ExactInt& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const ExactInt& o) const {
    int c = cmp(v_, o.v_);
    return c <=> 0;
  }

 private:
  mpz_class v_;
};

/// n!
ExactInt factorial(unsigned long n);

/// n choose k; returns 0 when k > n.
ExactInt binomial(unsigned long n, unsigned long k);

/// (sum parts)! / prod(parts[i]!). parts must be non-empty.
ExactInt multinomial(std::span<const unsigned long> parts);

/// base^exp (exp >= 0).
ExactInt pow(const ExactInt& base, unsigned long exp);

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Equality is structural (which, in lowest terms, is value
/// equality).
class ExactRational {
 public:
  ExactRational() : v_(0) {}
  ExactRational(int v) : v_(v) {}
  ExactRational(long v) : v_(v) {}
  ExactRational(unsigned long v) : v_(static_cast<unsigned long>(v)) {}
  ExactRational(const ExactInt& v) : v_(v.raw()) {}

  /// num/den, normalized. Throws std::domain_error if den == 0.
  ExactRational(const ExactInt& num, const ExactInt& den);

  /// Parses "p" or "p/q" in decimal. Throws std::invalid_argument on
  /// malformed input, std::domain_error on zero denominator.
  explicit ExactRational(const std::string& text);

  ExactInt num() const { return ExactInt(mpz_class(v_.get_num())); }
  ExactInt den() const { return ExactInt(mpz_class(v_.get_den())); }

  /// "p/q", or plain "p" when the denominator is 1.
  std::string str() const;

  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  ExactRational operator-() const { return ExactRational(mpq_class(-v_)); }
  ExactRational operator+(const ExactRational& o) const { return ExactRational(mpq_class(v_ + o.v_)); }
  ExactRational operator-(const ExactRational& o) const { return ExactRational(mpq_class(v_ - o.v_)); }
  ExactRational operator*(const ExactRational& o) const { return ExactRational(mpq_class(v_ * o.v_)); }

  /// Throws std::domain_error on division by zero.
  ExactRational operator/(const ExactRational& o) const;

  bool operator==(const ExactRational& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const ExactRational& o) const {
    int c = cmp(v_, o.v_);
    return c <=> 0;
  }

 private:
  explicit ExactRational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;  // canonical: lowest terms, positive denominator
};

/// base^exp (exp >= 0).
ExactRational pow(const ExactRational& base, unsigned long exp);

/// Natural logarithm of an exact rational, to double precision. Stable for
/// arbitrarily large numerators/denominators: each part is split into a
/// mantissa and a binary exponent, never round-tripped through a double.
/// Throws std::domain_error for q <= 0.
double ln_exact(const ExactRational& q);
double ln_exact(const ExactInt& n);

}  // namespace permstat
