#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "gradalg/errors.hpp"

namespace gradalg {

bool is_prime(std::uint64_t n);

// Runtime description of an exact ground field: Q or F_p.
struct FieldSpec {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(std::uint32_t p);

  bool is_rational() const { return kind == Kind::rational; }
  std::string name() const;

  // Canonical representative of q in this field (F_p: integer in [0,p)).
  mpq_class normalize(const mpq_class& q) const;

  // True iff n * 1 is a unit in the field.
  bool is_invertible_integer(std::uint64_t n) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Arithmetic policy for Q.
struct Rationals {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  value_type from_rational(const mpq_class& q) const { return q; }
  mpq_class to_rational(const value_type& v) const { return v; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw DomainError("division by zero in Q");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  // a += b * c
  void fma(value_type& a, const value_type& b, const value_type& c) const { a += b * c; }

  std::uint64_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }
};

// Arithmetic policy for F_p with p < 2^31.
struct PrimeField {
  using value_type = std::uint64_t;

  std::uint64_t p = 2;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<value_type>(r < 0 ? r + static_cast<long>(p) : r);
  }
  value_type from_rational(const mpq_class& q) const;
  mpq_class to_rational(const value_type& v) const { return mpq_class(static_cast<unsigned long>(v)); }

  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  value_type inv(value_type a) const {
    if (a == 0) throw DomainError("division by zero in F_" + std::to_string(p));
    return pow(a, p - 2);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool equal(value_type a, value_type b) const { return a == b; }
  void fma(value_type& a, value_type b, value_type c) const { a = (a + b * c) % p; }

  std::uint64_t characteristic() const { return p; }
  FieldSpec spec() const { return FieldSpec::prime_field(static_cast<std::uint32_t>(p)); }
};

template <class K>
concept ExactField = requires(const K& k, const typename K::value_type& a) {
  { k.add(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.mul(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.inv(a) } -> std::convertible_to<typename K::value_type>;
  { k.is_zero(a) } -> std::convertible_to<bool>;
  { k.characteristic() } -> std::convertible_to<std::uint64_t>;
};

// Runs fn with the arithmetic policy matching spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::prime) {
    return std::forward<Fn>(fn)(PrimeField{spec.characteristic});
  }
  return std::forward<Fn>(fn)(Rationals{});
}

}  // namespace gradalg
