// Slow reference implementations used to cross-check the library. Nothing
// here calls into saxl beyond reading a field's modulus.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace ref {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// F_{p^k} by schoolbook polynomial arithmetic; elements use base-p digits,
/// constant term lowest (the same encoding as the library).
struct NaiveField {
  u32 p = 2;
  unsigned k = 1;
  std::vector<u32> modulus;  // monic, low to high, size k + 1

  u64 order() const {
    u64 q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    return q;
  }
  std::vector<u32> digits(u32 a) const {
    std::vector<u32> d(k);
    for (unsigned i = 0; i < k; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  u32 pack(const std::vector<u32>& d) const {
    u32 a = 0;
    for (unsigned i = k; i-- > 0;) a = a * p + d[i];
    return a;
  }
  u32 add(u32 a, u32 b) const {
    auto x = digits(a), y = digits(b);
    for (unsigned i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
  u32 neg(u32 a) const {
    auto x = digits(a);
    for (auto& c : x) c = (p - c) % p;
    return pack(x);
  }
  u32 sub(u32 a, u32 b) const { return add(a, neg(b)); }
  u32 mul(u32 a, u32 b) const {
    auto x = digits(a), y = digits(b);
    std::vector<u32> prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i) {
      for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    }
    for (unsigned i = 2 * k - 1; i >= k; --i) {
      u32 c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (unsigned j = 0; j < k; ++j) {
        prod[i - k + j] = (prod[i - k + j] + p * p - c * modulus[j] % p) % p;
      }
    }
    prod.resize(k);
    return pack(prod);
  }
  u32 inv(u32 a) const {
    for (u32 b = 1; b < order(); ++b) {
      if (mul(a, b) == 1) return b;
    }
    return 0;
  }
};

/// True iff poly (low to high, any leading coefficient) has no factor of
/// degree 1..deg/2 over F_p, by trial division with every monic candidate.
inline bool irreducible_by_trial(u32 p, const std::vector<u32>& poly) {
  const std::size_t n = poly.size() - 1;
  auto rem = [&](std::vector<int> a, const std::vector<int>& b) {
    int lead_inv = 1;
    while ((lead_inv * b.back()) % static_cast<int>(p) != 1) ++lead_inv;
    while (a.size() >= b.size()) {
      int c = (a.back() * lead_inv) % static_cast<int>(p);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = ((a[shift + i] - c * b[i]) % static_cast<int>(p) + static_cast<int>(p)) %
                       static_cast<int>(p);
      }
      a.pop_back();
    }
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
  };
  std::vector<int> f(poly.begin(), poly.end());
  for (std::size_t deg = 1; deg <= n / 2; ++deg) {
    u64 count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (u64 c = 0; c < count; ++c) {
      std::vector<int> g(deg + 1);
      u64 x = c;
      for (std::size_t i = 0; i < deg; ++i) {
        g[i] = static_cast<int>(x % p);
        x /= p;
      }
      g[deg] = 1;
      if (rem(f, g)) return false;
    }
  }
  return true;
}

/// Square matrix, row-major, over a NaiveField.
using NMat = std::vector<u32>;
using NVec = std::vector<u32>;

inline NMat nmul(const NaiveField& f, const NMat& a, const NMat& b, std::size_t n) {
  NMat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      u32 s = 0;
      for (std::size_t t = 0; t < n; ++t) s = f.add(s, f.mul(a[i * n + t], b[t * n + j]));
      c[i * n + j] = s;
    }
  }
  return c;
}

inline NVec napply(const NaiveField& f, const NVec& v, const NMat& m) {
  const std::size_t n = v.size();
  NVec out(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    u32 s = 0;
    for (std::size_t i = 0; i < n; ++i) s = f.add(s, f.mul(v[i], m[i * n + j]));
    out[j] = s;
  }
  return out;
}

/// All products of generators, by a plain worklist over a std::set.
inline std::vector<NMat> closure(const NaiveField& f, const std::vector<NMat>& gens, std::size_t n) {
  NMat id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  std::set<NMat> seen{id};
  std::vector<NMat> work{id};
  while (!work.empty()) {
    NMat x = work.back();
    work.pop_back();
    for (const auto& g : gens) {
      NMat y = nmul(f, x, g, n);
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

/// Every vector of F_q^n, coordinate 0 varying fastest.
inline std::vector<NVec> all_vectors(const NaiveField& f, std::size_t n) {
  const u64 q = f.order();
  u64 total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  std::vector<NVec> out;
  out.reserve(total);
  for (u64 x = 0; x < total; ++x) {
    NVec v(n);
    u64 y = x;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<u32>(y % q);
      y /= q;
    }
    out.push_back(v);
  }
  return out;
}

/// Number of group elements fixing v.
inline u64 stabiliser_size(const NaiveField& f, const std::vector<NMat>& group, const NVec& v) {
  u64 s = 0;
  for (const auto& g : group) s += napply(f, v, g) == v;
  return s;
}

/// Size of the pointwise stabiliser of {a, b} in the affine group
/// {x -> x g + t}, by trying every (g, t).
inline u64 affine_pair_stabiliser(const NaiveField& f, const std::vector<NMat>& group,
                                  const std::vector<NVec>& translations, const NVec& a, const NVec& b) {
  u64 s = 0;
  auto shift = [&](NVec x, const NVec& t) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = f.add(x[i], t[i]);
    return x;
  };
  for (const auto& g : group) {
    NVec ag = napply(f, a, g), bg = napply(f, b, g);
    for (const auto& t : translations) {
      if (shift(ag, t) == a && shift(bg, t) == b) ++s;
    }
  }
  return s;
}

/// Permutations, 0-based images; composition applies a then b.
using Perm = std::vector<u32>;

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

inline Perm perm_inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<u32>(i);
  return c;
}

inline std::vector<Perm> perm_closure(const std::vector<Perm>& gens) {
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0u);
  std::set<Perm> seen{id};
  std::vector<Perm> work{id};
  while (!work.empty()) {
    Perm x = work.back();
    work.pop_back();
    for (const auto& g : gens) {
      Perm y = compose(x, g);
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

/// Order of a permutation as the lcm of its cycle lengths.
inline u64 perm_order(const Perm& a) {
  std::vector<bool> done(a.size(), false);
  u64 ord = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (done[i]) continue;
    u64 len = 0;
    for (std::size_t j = i; !done[j]; j = a[j]) {
      done[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

/// Conjugacy class sizes keyed by element order, from orbits of the
/// conjugation action of the generators.
inline std::multimap<u64, u64> perm_class_sizes(const std::vector<Perm>& elements,
                                                const std::vector<Perm>& gens) {
  std::set<Perm> unseen(elements.begin(), elements.end());
  std::vector<Perm> ginv;
  for (const auto& g : gens) ginv.push_back(perm_inverse(g));
  std::multimap<u64, u64> out;
  while (!unseen.empty()) {
    Perm x = *unseen.begin();
    unseen.erase(unseen.begin());
    std::vector<Perm> work{x};
    u64 size = 1;
    while (!work.empty()) {
      Perm y = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Perm z = compose(compose(ginv[i], y), gens[i]);
        if (unseen.erase(z)) {
          work.push_back(z);
          ++size;
        }
      }
    }
    out.emplace(perm_order(x), size);
  }
  return out;
}

/// All partitions of n, weakly decreasing.
inline std::vector<std::vector<unsigned>> partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned max) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned x = std::min(left, max); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Dominance by prefix sums, written out directly.
inline bool dominates(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  unsigned sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

}  // namespace ref
