#include "saxl/field.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "saxl/error.hpp"

namespace saxl {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NotPrime: return "not-prime";
    case ErrorKind::ReducibleModulus: return "reducible-modulus";
    case ErrorKind::FieldTooLarge: return "field-too-large";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::FieldMismatch: return "field-mismatch";
    case ErrorKind::SingularMatrix: return "singular-matrix";
    case ErrorKind::InsufficientExtension: return "insufficient-extension";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::MissingData: return "missing-data";
    case ErrorKind::UnknownSocle: return "unknown-socle";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1 % m;
  unsigned __int128 x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t multiplicative_order_mod(std::uint64_t base, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(base, n) != 1) {
    throw Error(ErrorKind::InvalidArgument, "multiplicative order: base not a unit");
  }
  // The order divides phi(n); walk phi's prime factors down.
  std::uint64_t phi = n;
  for (auto pf : prime_factors(n)) phi = phi / pf * (pf - 1);
  std::uint64_t ord = phi;
  for (auto pf : prime_factors(phi)) {
    while (ord % pf == 0 && powmod_u64(base, ord / pf, n) == 1) ord /= pf;
  }
  return ord;
}

// ---------------------------------------------------------------------------
// Dense polynomials over F_p used only while constructing a field.

namespace {

using PPoly = std::vector<std::uint64_t>;

void trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmod(PPoly a, const PPoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  std::uint64_t lead_inv = powmod_u64(m.back(), p - 2, p);
  while (a.size() >= m.size()) {
    std::uint64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  return pmod(std::move(r), m, p);
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& m, std::uint64_t p) {
  PPoly r{1};
  base = pmod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = pmulmod(r, base, m, p);
    base = pmulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test.
bool irreducible_over_prime(const PPoly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  PPoly x{0, 1};
  // frob[i] = x^{p^i} mod f
  std::vector<PPoly> frob(k + 1);
  frob[0] = pmod(x, f, p);
  for (std::size_t i = 1; i <= k; ++i) frob[i] = ppowmod(frob[i - 1], p, f, p);
  if (frob[k] != frob[0]) return false;
  for (auto l : prime_factors(k)) {
    PPoly h = frob[k / l];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    PPoly g = pgcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

namespace detail {

Elem FieldImpl::slow_add(Elem a, Elem b) const {
  if (p == 2) return a ^ b;
  if (k == 1) return static_cast<Elem>((std::uint64_t{a} + b) % p);
  Elem out = 0;
  for (unsigned i = 0; i < k; ++i) {
    std::uint32_t da = a % p, db = b % p;
    a /= p;
    b /= p;
    out += ((da + db) % p) * pow_p[i];
  }
  return out;
}

Elem FieldImpl::slow_neg(Elem a) const {
  if (p == 2) return a;
  Elem out = 0;
  for (unsigned i = 0; i < k; ++i) {
    std::uint32_t da = a % p;
    a /= p;
    out += ((p - da) % p) * pow_p[i];
  }
  return out;
}

Elem FieldImpl::slow_mul(Elem a, Elem b) const {
  if (k == 1) return static_cast<Elem>(std::uint64_t{a} * b % p);
  std::uint64_t da[64], db[64], prod[128] = {};
  for (unsigned i = 0; i < k; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (unsigned i = 0; i < k; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (unsigned deg = 2 * k - 2; deg >= k; --deg) {
    std::uint64_t c = prod[deg];
    if (c != 0) {
      prod[deg] = 0;
      for (unsigned i = 0; i < k; ++i) {
        prod[deg - k + i] = (prod[deg - k + i] + (p - c) * modulus[i]) % p;
      }
    }
  }
  Elem out = 0;
  for (unsigned i = 0; i < k; ++i) out += static_cast<Elem>(prod[i]) * pow_p[i];
  return out;
}

}  // namespace detail

namespace {

Elem slow_pow(const detail::FieldImpl& f, Elem a, std::uint64_t e) {
  Elem r = 1;
  while (e) {
    if (e & 1) r = f.slow_mul(r, a);
    a = f.slow_mul(a, a);
    e >>= 1;
  }
  return r;
}

std::shared_ptr<const detail::FieldImpl> build_field(std::uint32_t p, unsigned k,
                                                      std::vector<Elem> modulus) {
  auto f = std::make_shared<detail::FieldImpl>();
  f->p = p;
  f->k = k;
  f->modulus = std::move(modulus);
  f->pow_p.resize(k + 1);
  std::uint64_t q = 1;
  for (unsigned i = 0; i <= k; ++i) {
    f->pow_p[i] = static_cast<std::uint32_t>(i < k ? q : 0);
    if (i < k) q *= p;
  }
  f->q = q;

  // Primitive element: least encoding whose order is q - 1.
  const auto factors = prime_factors(q - 1);
  Elem g = 1;
  if (q > 2) {
    for (Elem cand = 2; cand < q; ++cand) {
      bool ok = true;
      for (auto l : factors) {
        if (slow_pow(*f, cand, (q - 1) / l) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g = cand;
        break;
      }
    }
  }
  f->primitive = g;

  if (k == 1) {
    f->repr = detail::FieldRepr::Prime;
  } else if (q <= (1u << 16)) {
    f->repr = detail::FieldRepr::Table;
  } else {
    f->repr = detail::FieldRepr::Poly;
  }

  if (q <= (1u << 16)) {
    const std::uint32_t n1 = static_cast<std::uint32_t>(q - 1);
    f->log.assign(q, 0);
    f->exp.assign(2 * static_cast<std::size_t>(n1), 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < n1; ++i) {
      f->exp[i] = x;
      f->exp[i + n1] = x;
      f->log[x] = i;
      x = f->slow_mul(x, g);
    }
    if (f->repr == detail::FieldRepr::Table && p != 2) {
      if (q <= 256) {
        f->add_table.resize(q * q);
        for (Elem a = 0; a < q; ++a) {
          for (Elem b = 0; b < q; ++b) {
            f->add_table[a * q + b] = static_cast<std::uint16_t>(f->slow_add(a, b));
          }
        }
      } else {
        f->zech.resize(n1);
        for (std::uint32_t n = 0; n < n1; ++n) {
          Elem s = f->slow_add(1, f->exp[n]);
          f->zech[n] = s == 0 ? detail::FieldImpl::kNoLog : f->log[s];
        }
      }
    }
  }
  return f;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint32_t, std::vector<Elem>>,
         std::shared_ptr<const detail::FieldImpl>>&
field_cache() {
  static std::map<std::pair<std::uint32_t, std::vector<Elem>>,
                  std::shared_ptr<const detail::FieldImpl>>
      cache;
  return cache;
}

}  // namespace

Field Field::make(std::uint32_t p, unsigned k, std::optional<std::vector<Elem>> modulus) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::NotPrime, "field characteristic " + std::to_string(p) + " is not prime");
  }
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "field degree must be >= 1");
  {
    unsigned __int128 q = 1;
    for (unsigned i = 0; i < k; ++i) {
      q *= p;
      if (q > (static_cast<unsigned __int128>(1) << 32)) {
        throw Error(ErrorKind::FieldTooLarge, "field order exceeds 2^32");
      }
    }
  }

  std::vector<Elem> mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != k + 1 || mod.back() != 1) {
      throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree k");
    }
    for (auto c : mod) {
      if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
    }
    PPoly f(mod.begin(), mod.end());
    if (!irreducible_over_prime(f, p)) {
      throw Error(ErrorKind::ReducibleModulus, "supplied modulus is reducible");
    }
  } else if (k == 1) {
    mod = {0, 1};
  } else {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    bool found = false;
    for (std::uint64_t n = 1; n < count && !found; ++n) {
      if (n % p == 0) continue;
      PPoly f(k + 1);
      std::uint64_t t = n;
      for (unsigned i = 0; i < k; ++i) {
        f[i] = t % p;
        t /= p;
      }
      f[k] = 1;
      if (irreducible_over_prime(f, p)) {
        mod.assign(f.begin(), f.end());
        found = true;
      }
    }
  }

  std::lock_guard<std::mutex> lock(cache_mutex());
  auto key = std::make_pair(p, mod);
  auto& cache = field_cache();
  if (auto it = cache.find(key); it != cache.end()) return Field(it->second);
  auto impl = build_field(p, k, mod);
  cache.emplace(std::move(key), impl);
  return Field(std::move(impl));
}

std::string Field::name() const { return "F_" + std::to_string(order()); }

Elem Field::inv(Elem a) const {
  const auto& f = *impl_;
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  if (!f.log.empty()) {
    std::uint32_t n1 = static_cast<std::uint32_t>(f.q - 1);
    return f.exp[(n1 - f.log[a]) % n1];
  }
  return pow(a, f.q - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  const auto& f = *impl_;
  if (a == 0) return e == 0 ? 1 : 0;
  if (!f.log.empty()) {
    std::uint64_t n1 = f.q - 1;
    return f.exp[static_cast<std::size_t>(std::uint64_t{f.log[a]} * (e % n1) % n1)];
  }
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t p = impl_->p;
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

std::vector<Elem> Field::digits(Elem a) const {
  std::vector<Elem> out(impl_->k);
  for (unsigned i = 0; i < impl_->k; ++i) {
    out[i] = a % impl_->p;
    a /= impl_->p;
  }
  return out;
}

Elem Field::from_digits(std::span<const Elem> coeffs) const {
  if (coeffs.size() > impl_->k) {
    throw Error(ErrorKind::InvalidArgument, "too many coefficients for field element");
  }
  Elem out = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= impl_->p) {
      throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
    }
    out += coeffs[i] * impl_->pow_p[i];
  }
  return out;
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "zero has no multiplicative order");
  std::uint64_t ord = order() - 1;
  for (auto l : prime_factors(ord)) {
    while (ord % l == 0 && pow(a, ord / l) == 1) ord /= l;
  }
  return ord;
}

}  // namespace saxl
