#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace saxl {

/// A field element in its canonical integer encoding: the coefficients of the
/// polynomial representative, base p, constant term in the lowest digit.
using Elem = std::uint32_t;

namespace detail {

enum class FieldRepr : std::uint8_t {
  Prime,     // F_p, residues
  Table,     // q <= 2^16: log/antilog tables
  Poly,      // q > 2^16: polynomial arithmetic
};

struct FieldImpl {
  std::uint32_t p = 2;
  unsigned k = 1;
  std::uint64_t q = 2;
  std::vector<Elem> modulus;  // monic, low-to-high, size k + 1
  FieldRepr repr = FieldRepr::Prime;
  Elem primitive = 1;

  std::vector<std::uint32_t> pow_p;  // p^i, i <= k
  std::vector<std::uint32_t> log;    // size q, log[0] unused
  std::vector<Elem> exp;             // size 2(q-1)
  std::vector<std::uint32_t> zech;   // log(1 + g^n), q - 1 entries; kNoLog if zero
  std::vector<std::uint16_t> add_table;  // q*q, used for small odd extension fields

  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  Elem slow_add(Elem a, Elem b) const;
  Elem slow_neg(Elem a) const;
  Elem slow_mul(Elem a, Elem b) const;
};

}  // namespace detail

/// Handle to an immutable finite field F_{p^k}. Copies share the same tables.
class Field {
 public:
  /// Builds F_{p^k}. Without a modulus the least irreducible monic polynomial
  /// in lexicographic order of (c_{k-1}, ..., c_0) is used.
  static Field make(std::uint32_t p, unsigned k = 1,
                    std::optional<std::vector<Elem>> modulus = std::nullopt);
  static Field prime(std::uint32_t p) { return make(p, 1); }

  Field() : Field(prime(2)) {}

  std::uint32_t characteristic() const { return impl_->p; }
  unsigned degree() const { return impl_->k; }
  std::uint64_t order() const { return impl_->q; }
  const std::vector<Elem>& modulus() const { return impl_->modulus; }
  bool is_prime_field() const { return impl_->k == 1; }
  Elem primitive() const { return impl_->primitive; }
  std::string name() const;

  Elem add(Elem a, Elem b) const {
    const auto& f = *impl_;
    switch (f.repr) {
      case detail::FieldRepr::Prime: {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Elem>(s >= f.p ? s - f.p : s);
      }
      case detail::FieldRepr::Table:
        if (f.p == 2) return a ^ b;
        if (!f.add_table.empty()) return f.add_table[a * f.q + b];
        return zech_add(a, b);
      case detail::FieldRepr::Poly:
        if (f.p == 2) return a ^ b;
        return f.slow_add(a, b);
    }
    return 0;
  }

  Elem neg(Elem a) const {
    const auto& f = *impl_;
    if (f.p == 2 || a == 0) return a;
    if (f.k == 1) return f.p - a;
    return f.slow_neg(a);
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    const auto& f = *impl_;
    if (a == 0 || b == 0) return 0;
    switch (f.repr) {
      case detail::FieldRepr::Prime:
        return static_cast<Elem>(std::uint64_t{a} * b % f.p);
      case detail::FieldRepr::Table:
        return f.exp[f.log[a] + f.log[b]];
      case detail::FieldRepr::Poly:
        return f.slow_mul(a, b);
    }
    return 0;
  }

  /// Throws on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const;
  /// Coefficients over F_p of the representative, low-to-high, length k.
  std::vector<Elem> digits(Elem a) const;
  Elem from_digits(std::span<const Elem> coeffs) const;

  bool contains(Elem a) const { return a < impl_->q; }
  std::uint64_t multiplicative_order(Elem a) const;

  /// Discrete log to the base primitive(); only for table-backed fields.
  bool has_log_table() const { return !impl_->log.empty(); }
  std::uint32_t log(Elem a) const { return impl_->log[a]; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldImpl> impl)
      : impl_(std::move(impl)) {}

  Elem zech_add(Elem a, Elem b) const {
    const auto& f = *impl_;
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint32_t la = f.log[a];
    std::uint32_t lb = f.log[b];
    std::uint32_t n1 = static_cast<std::uint32_t>(f.q - 1);
    std::uint32_t diff = lb >= la ? lb - la : lb + n1 - la;
    std::uint32_t z = f.zech[diff];
    if (z == detail::FieldImpl::kNoLog) return 0;
    return f.exp[la + z];
  }

  std::shared_ptr<const detail::FieldImpl> impl_;
};

/// True iff n is prime (deterministic trial division; n < 2^32).
bool is_prime(std::uint64_t n);
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Least e >= 1 with base^e = 1 mod n; requires gcd(base, n) = 1.
std::uint64_t multiplicative_order_mod(std::uint64_t base, std::uint64_t n);

}  // namespace saxl
