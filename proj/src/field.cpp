#include "dimjump/field.hpp"

#include "dimjump/errors.hpp"

namespace dimjump {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw AlgebraError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(static_cast<std::uint32_t>(p));
}

Scalar Field::reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return Scalar(r);
}

Scalar Field::from_int(long v) const {
  if (p_ == 0) return Scalar(v);
  return reduce(mpz_class(v));
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (p_ == 0) return v;
  Scalar den = reduce(v.get_den());
  if (is_zero(den)) throw AlgebraError("denominator vanishes in " + name());
  return mul(reduce(v.get_num()), inv(den));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  unsigned long s = a.get_num().get_ui() + b.get_num().get_ui();
  if (s >= p_) s -= p_;
  return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  unsigned long x = a.get_num().get_ui(), y = b.get_num().get_ui();
  return Scalar(x >= y ? x - y : x + p_ - y);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  unsigned long long m = static_cast<unsigned long long>(a.get_num().get_ui()) * b.get_num().get_ui();
  return Scalar(static_cast<unsigned long>(m % p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  unsigned long x = a.get_num().get_ui();
  return Scalar(x == 0 ? 0ul : p_ - x);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw AlgebraError("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_class p(p_);
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

std::string Field::format(const Scalar& a) const { return a.get_str(); }

}  // namespace dimjump
