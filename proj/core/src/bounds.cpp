#include "saxl/bounds.hpp"

#include <algorithm>
#include <array>

#include "saxl/error.hpp"

namespace saxl {

namespace {

constexpr std::array<std::string_view, 26> kSporadic = {
    "M11", "M12", "M22", "M23", "M24", "J1",  "J2",   "J3",   "J4",
    "HS",  "McL", "Suz", "Co1", "Co2", "Co3", "He",   "Ru",   "O'N",
    "Ly",  "Th",  "HN",  "Fi22", "Fi23", "Fi24'", "B", "M"};

}  // namespace

std::string canonical_sporadic(std::string_view name) {
  std::string s;
  for (char c : name) {
    if (c != '_' && c != ' ' && c != '{' && c != '}') s.push_back(c);
  }
  if (s == "ON") s = "O'N";
  if (s == "Fi24" || s == "Fi24p") s = "Fi24'";
  for (auto n : kSporadic) {
    if (s == n) return s;
  }
  return {};
}

void ScreeningInput::validate() const {
  if (i2 > iP) throw Error(ErrorKind::InvalidArgument, "i2 exceeds iP");
  if (iP < 0 || i2 < 0) throw Error(ErrorKind::InvalidArgument, "negative element count");
  if (alpha < 2 || alpha > 6 || alpha2 < 2 || alpha2 > 6) {
    throw Error(ErrorKind::InvalidArgument, "alpha values must lie in 2..6");
  }
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "d must be >= 2");
  if (r < 2) throw Error(ErrorKind::InvalidArgument, "r must be >= 2");
}

const AlphaTable& AlphaTable::builtin() {
  static const AlphaTable table = [] {
    AlphaTable t;
    t.overrides_ = {
        {"M22", "2B", 4},
        {"J2", "3A", 3},   {"J2", "2A", 4},
        {"HS", "4A", 3},   {"HS", "2C", 4},
        {"McL", "3A", 3},
        {"Suz", "3A", 4},
        {"Co2", "2A", 4},
        {"Co1", "3A", 3},
        {"Fi22", "3A", 3}, {"Fi22", "3B", 3}, {"Fi22", "2D", 4}, {"Fi22", "2A", 6},
        {"Fi23", "3A", 3}, {"Fi23", "3B", 3}, {"Fi23", "2A", 6},
        {"Fi24'", "3A", 3}, {"Fi24'", "3B", 3}, {"Fi24'", "2C", 5},
        {"HN", "4D", 3},
        {"Ly", "3A", 3},
        {"B", "2A", 4},
    };
    return t;
  }();
  return table;
}

std::optional<unsigned> AlphaTable::find(std::string_view socle, std::string_view label) const {
  for (const auto& o : overrides_) {
    if (o.socle == socle && o.label == label) return o.alpha;
  }
  return std::nullopt;
}

unsigned alpha_of(std::string_view socle, std::string_view label, std::uint64_t element_order) {
  if (!is_prime(element_order)) {
    throw Error(ErrorKind::InvalidArgument, "alpha_of needs a prime element order");
  }
  const auto& table = AlphaTable::builtin();
  const unsigned fallback = element_order == 2 ? table.default_involution() : table.default_odd();
  if (socle.empty()) return fallback;
  std::string canon = canonical_sporadic(socle);
  if (canon.empty()) {
    for (const auto& o : table.overrides()) {
      if (o.label == label) {
        throw Error(ErrorKind::UnknownSocle,
                    "unknown socle '" + std::string(socle) + "' for class " + std::string(label));
      }
    }
    return fallback;
  }
  if (auto a = table.find(canon, label)) return *a;
  return fallback;
}

unsigned alpha_dim_bound(unsigned alpha, unsigned d) {
  if (alpha < 2) throw Error(ErrorKind::InvalidArgument, "alpha must be >= 2");
  return d * (alpha - 1) / alpha;
}

unsigned alpha_ceil_part(unsigned alpha, unsigned d) {
  if (alpha < 2) throw Error(ErrorKind::InvalidArgument, "alpha must be >= 2");
  return (d + alpha - 1) / alpha;
}

BigInt big_pow(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

BigInt class_eigen_sum_bounded(unsigned alpha, unsigned d, const BigInt& r) {
  return big_pow(r, alpha_dim_bound(alpha, d)) + big_pow(r, alpha_ceil_part(alpha, d));
}

namespace {

// Numerator of 1 - f times r^d, doubled so every term is an integer:
// iP (r^a + r^b) + 2 i2 (r^a2 + r^b2).
BigInt doubled_excess(const ScreeningInput& in) {
  return in.iP * class_eigen_sum_bounded(in.alpha, in.d, in.r) +
         2 * in.i2 * class_eigen_sum_bounded(in.alpha2, in.d, in.r);
}

}  // namespace

Rational screening_f(const ScreeningInput& in) {
  in.validate();
  BigInt denom = 2 * big_pow(in.r, in.d);
  return Rational(1) - Rational(doubled_excess(in), denom);
}

bool screening_passes(const ScreeningInput& in) {
  in.validate();
  // f >= 1/2  <=>  2 r^d - doubled_excess >= r^d  <=>  r^d >= doubled_excess
  return big_pow(in.r, in.d) >= doubled_excess(in);
}

BigInt max_R(const BigInt& iP, const BigInt& i2, unsigned alpha, unsigned alpha2, unsigned d) {
  ScreeningInput in{iP, i2, alpha, alpha2, d, 2};
  auto below_half = [&](const BigInt& r) {
    in.r = r;
    return !screening_passes(in);
  };
  if (!below_half(2)) return 1;
  BigInt lo = 2, hi = 4;
  while (below_half(hi)) {
    lo = hi;
    hi *= 2;
  }
  // below_half(lo), !below_half(hi)
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (below_half(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

ScreeningInput screening_input(std::span<const ClassDatum> classes, unsigned d, const BigInt& r) {
  ScreeningInput in;
  in.iP = 0;
  in.i2 = 0;
  in.alpha = 2;
  in.alpha2 = 2;
  in.d = d;
  in.r = r;
  bool any_involution = false;
  for (const auto& c : classes) {
    in.iP += c.class_size;
    if (c.element_order == 2) {
      in.i2 += c.class_size;
      in.alpha2 = std::max(in.alpha2, c.alpha);
      any_involution = true;
    } else {
      in.alpha = std::max(in.alpha, c.alpha);
    }
  }
  if (!any_involution) in.alpha2 = AlphaTable::builtin().default_involution();
  return in;
}

BigInt class_eigen_sum_exact(const ClassDatum& c, const BigInt& r, unsigned d) {
  if (!c.eigen) {
    throw Error(ErrorKind::MissingData, "class " + c.label + " has no eigenspace data");
  }
  if (c.eigen->total() > d) {
    throw Error(ErrorKind::InvalidArgument, "eigenspace dimensions of " + c.label + " exceed d");
  }
  BigInt s = 0;
  for (const auto& [ev, dim] : c.eigen->parts) s += big_pow(r, static_cast<unsigned>(dim));
  return s;
}

Rational sigma(std::span<const ClassDatum> classes, const BigInt& r, unsigned d, SigmaMode mode) {
  Rational total = 0;
  for (const auto& c : classes) {
    if (!is_prime(c.element_order)) {
      throw Error(ErrorKind::InvalidArgument, "sigma needs prime order classes");
    }
    BigInt term;
    switch (mode) {
      case SigmaMode::Exact:
        term = class_eigen_sum_exact(c, r, d);
        break;
      case SigmaMode::Mixed:
        if (c.is_unipotent) {
          term = big_pow(r, alpha_dim_bound(c.alpha, d));
        } else {
          term = class_eigen_sum_exact(c, r, d);
        }
        break;
      case SigmaMode::Bounded:
        term = class_eigen_sum_bounded(c.alpha, d, r);
        break;
    }
    total += Rational(BigInt(c.class_size) * term, BigInt(c.element_order - 1));
  }
  return total;
}

namespace {

void check_partition(const Partition& p) {
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] > p[i - 1]) throw Error(ErrorKind::InvalidArgument, "partition is not weakly decreasing");
  }
}

}  // namespace

bool dominance_check(const Partition& lambda, const Partition& mu) {
  check_partition(lambda);
  check_partition(mu);
  unsigned long tl = 0, tm = 0;
  for (auto x : lambda) tl += x;
  for (auto x : mu) tm += x;
  if (tl != tm) throw Error(ErrorKind::InvalidArgument, "partitions have different totals");
  unsigned long sl = 0, sm = 0;
  for (std::size_t i = 0; i < std::max(lambda.size(), mu.size()); ++i) {
    sl += i < lambda.size() ? lambda[i] : 0;
    sm += i < mu.size() ? mu[i] : 0;
    if (sm > sl) return false;
  }
  return true;
}

BigInt power_sum(const Partition& parts, const BigInt& r) {
  BigInt s = 0;
  for (auto x : parts) s += big_pow(r, x);
  return s;
}

}  // namespace saxl
