#include "gradalg/field.hpp"

namespace gradalg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw DomainError("F_p requires a prime p < 2^31, got " + std::to_string(p));
  return {Kind::prime, p};
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(characteristic);
}

mpq_class FieldSpec::normalize(const mpq_class& q) const {
  if (is_rational()) {
    mpq_class out = q;
    out.canonicalize();
    return out;
  }
  return PrimeField{characteristic}.to_rational(PrimeField{characteristic}.from_rational(q));
}

bool FieldSpec::is_invertible_integer(std::uint64_t n) const {
  if (is_rational()) return n != 0;
  return n % characteristic != 0;
}

PrimeField::value_type PrimeField::from_rational(const mpq_class& q) const {
  mpz_class pz = static_cast<unsigned long>(p);
  mpz_class num = q.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = q.get_den() % pz;
  if (den == 0) throw DomainError("denominator divisible by " + std::to_string(p));
  value_type n = num.get_ui();
  value_type d = den.get_ui();
  return mul(n, inv(d));
}

}  // namespace gradalg
