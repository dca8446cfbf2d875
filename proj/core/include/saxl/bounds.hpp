#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "saxl/matgroup.hpp"

namespace saxl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Scalar inputs of the screening function f(G, d, r).
struct ScreeningInput {
  BigInt iP;  // prime-order elements of G/Z (involutions included)
  BigInt i2;  // involutions of G/Z
  unsigned alpha = 2;   // max alpha over odd prime order classes
  unsigned alpha2 = 3;  // max alpha over involution classes
  unsigned d = 2;
  BigInt r = 2;  // any integer >= 2, not only prime powers

  void validate() const;
};

struct AlphaOverride {
  std::string socle;
  std::string label;
  unsigned alpha;
};

/// Classes whose alpha value exceeds the default (2 for odd order, 3 for
/// involutions) in almost simple groups with sporadic socle.
class AlphaTable {
 public:
  static const AlphaTable& builtin();

  unsigned default_odd() const { return 2; }
  unsigned default_involution() const { return 3; }
  const std::vector<AlphaOverride>& overrides() const { return overrides_; }
  std::optional<unsigned> find(std::string_view socle, std::string_view label) const;

 private:
  std::vector<AlphaOverride> overrides_;
};

/// Canonical ATLAS spelling of a sporadic group name, or empty if unknown.
std::string canonical_sporadic(std::string_view name);

/// alpha(h) for a class of prime order. Empty socle means no overrides.
/// Throws UnknownSocle for an unrecognised socle combined with a label that
/// the override table uses.
unsigned alpha_of(std::string_view socle, std::string_view label, std::uint64_t element_order);

/// floor((1 - 1/alpha) d)
unsigned alpha_dim_bound(unsigned alpha, unsigned d);
/// ceil(d / alpha)
unsigned alpha_ceil_part(unsigned alpha, unsigned d);

/// Exact value of f(G, d, r).
Rational screening_f(const ScreeningInput& in);
/// 2 f >= 1, without division.
bool screening_passes(const ScreeningInput& in);

/// Largest integer R with f(G, d, R) < 1/2; 1 when f(G, d, 2) >= 1/2.
BigInt max_R(const BigInt& iP, const BigInt& i2, unsigned alpha, unsigned alpha2, unsigned d);

/// i_P, i_2, alpha, alpha_2 from a list of prime-order classes.
ScreeningInput screening_input(std::span<const ClassDatum> classes, unsigned d, const BigInt& r);

/// sum over eigenvalues k of r^{dim eigenspace}. Throws MissingData without eigen.
BigInt class_eigen_sum_exact(const ClassDatum& c, const BigInt& r, unsigned d);
/// r^{floor((1-1/alpha) d)} + r^{ceil(d/alpha)}
BigInt class_eigen_sum_bounded(unsigned alpha, unsigned d, const BigInt& r);

enum class SigmaMode { Exact, Mixed, Bounded };

/// sum over classes of |h^H| / (o(h) - 1) times the per-class eigen sum:
///   Exact   - eigenspace data for every class
///   Mixed   - exact for semisimple classes; unipotent classes have a single
///             eigenspace, bounded by r^{floor((1-1/alpha) d)}
///   Bounded - two-term bound for every class
Rational sigma(std::span<const ClassDatum> classes, const BigInt& r, unsigned d, SigmaMode mode);

using Partition = std::vector<unsigned>;

/// lambda dominates mu. Both must be weakly decreasing with equal totals.
bool dominance_check(const Partition& lambda, const Partition& mu);
BigInt power_sum(const Partition& parts, const BigInt& r);

BigInt big_pow(const BigInt& base, unsigned e);

}  // namespace saxl
