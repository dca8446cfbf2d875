#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "saxl/field.hpp"

namespace saxl {

/// Univariate polynomial over a Field, coefficients low-to-high, no trailing
/// zeros. The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elem> coeffs);

  static Poly monomial(const Field& f, std::size_t deg, Elem c = 1);
  static Poly x(const Field& f) { return monomial(f, 1); }
  static Poly constant(const Field& f, Elem c);

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  Poly monic() const;
  Elem eval(Elem x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();

  Field field_;
  std::vector<Elem> c_;
};

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

PolyDivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Rabin's irreducibility test over the coefficient field.
bool is_irreducible(const Poly& f);

/// Distinct roots in the coefficient field, ascending by encoding.
/// Takes gcd with x^q - x, then splits with equal-degree factorisation.
std::vector<Elem> roots(const Poly& f);

/// Splits a squarefree product of distinct monic linear factors.
std::vector<Elem> split_linear(const Poly& f, std::mt19937_64& rng);

}  // namespace saxl
