#include "hallforge/coeff.hpp"

#include <stdexcept>

#include "hallforge/errors.hpp"

namespace hallforge {

void Coeff::check_session(const Coeff& rhs) const {
  if (q_ == 0) q_ = rhs.q_;
  if (rhs.q_ != 0 && q_ != rhs.q_) throw internal_error("mixed coefficient fields");
}

Coeff& Coeff::operator+=(const Coeff& rhs) {
  check_session(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& rhs) {
  check_session(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& rhs) {
  check_session(rhs);
  // (a + b s)(c + d s) = (ac + bd q) + (ad + bc) s  with s^2 = q
  mpq_class na = a_ * rhs.a_ + b_ * rhs.b_ * q_;
  mpq_class nb = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& rhs) {
  check_session(rhs);
  if (rhs.is_zero()) throw std::domain_error("division by zero in Q(sqrt q)");
  // conjugate trick; c^2 - d^2 q vanishes only at zero since q is not a square
  mpq_class den = rhs.a_ * rhs.a_ - rhs.b_ * rhs.b_ * q_;
  Coeff conj(q_, rhs.a_, -rhs.b_);
  *this *= conj;
  a_ /= den;
  b_ /= den;
  return *this;
}

Coeff Coeff::v_pow(std::uint32_t q, long long e) {
  long long k = e >= 0 ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
  long long r = e - 2 * k;                          // 0 or 1
  mpq_class qe = q_pow(q, k);
  return r ? Coeff(q, 0, qe) : Coeff(q, qe, 0);
}

mpq_class Coeff::q_pow(std::uint32_t q, long long e) {
  mpz_class num;
  mpz_ui_pow_ui(num.get_mpz_t(), q, static_cast<unsigned long>(e >= 0 ? e : -e));
  if (e >= 0) return mpq_class(num);
  mpq_class out(1);
  out /= mpq_class(num);
  return out;
}

std::string rational_to_string(const mpq_class& x) { return x.get_str(); }

std::string Coeff::to_string() const {
  if (b_ == 0) return a_.get_str();
  return "(" + a_.get_str() + "," + b_.get_str() + ")";
}

}  // namespace hallforge
