#ifndef HALLFORGE_COEFF_HPP
#define HALLFORGE_COEFF_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace hallforge {

/// Exact element a + b*sqrt(q) of Q(sqrt(q)) for a fixed prime q.
/// Since q is prime, sqrt(q) is irrational, so the representation is unique
/// and equality is componentwise. All structure constants of the Hall
/// algebras built here live in this field; nothing is ever rounded.
class Coeff {
 public:
  /// Default-constructed value is a neutral zero that joins whichever field
  /// it first meets; accumulation maps rely on this.
  Coeff() : q_(0) {}
  explicit Coeff(std::uint32_t q) : q_(q) {}
  Coeff(std::uint32_t q, mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)), q_(q) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static Coeff zero(std::uint32_t q) { return Coeff(q); }
  static Coeff one(std::uint32_t q) { return Coeff(q, 1, 0); }
  static Coeff from_rational(std::uint32_t q, const mpq_class& a) { return Coeff(q, a, 0); }
  static Coeff from_integer(std::uint32_t q, const mpz_class& a) {
    return Coeff(q, mpq_class(a), 0);
  }

  /// v = sqrt(q).
  static Coeff v(std::uint32_t q) { return Coeff(q, 0, 1); }
  /// v^e for any integer e; v^-1 = v/q.
  static Coeff v_pow(std::uint32_t q, long long e);
  /// q^e as a rational, e may be negative.
  static mpq_class q_pow(std::uint32_t q, long long e);

  const mpq_class& rat() const { return a_; }
  const mpq_class& srt() const { return b_; }
  std::uint32_t q() const { return q_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  Coeff operator-() const { return Coeff(q_, -a_, -b_); }
  Coeff& operator+=(const Coeff& rhs);
  Coeff& operator-=(const Coeff& rhs);
  Coeff& operator*=(const Coeff& rhs);
  Coeff& operator/=(const Coeff& rhs);  // throws on zero divisor
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }

  bool operator==(const Coeff& rhs) const { return a_ == rhs.a_ && b_ == rhs.b_; }

  /// "a" when the sqrt part vanishes, "(a,b)" otherwise; fractions reduced.
  std::string to_string() const;

 private:
  void check_session(const Coeff& rhs) const;
  mpq_class a_, b_;
  mutable std::uint32_t q_;
};

std::string rational_to_string(const mpq_class& x);

}  // namespace hallforge

#endif
