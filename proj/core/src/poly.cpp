#include "saxl/poly.hpp"

#include <algorithm>

#include "saxl/error.hpp"

namespace saxl {

Poly::Poly(Field field, std::vector<Elem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Field& f, std::size_t deg, Elem c) {
  std::vector<Elem> v(deg + 1, 0);
  v[deg] = c;
  return Poly(f, std::move(v));
}

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  Elem li = field_.inv(c_.back());
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], li);
  return Poly(field_, std::move(v));
}

Elem Poly::eval(Elem x) const {
  Elem r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.add(field_.mul(r, x), *it);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  const Field& f = a.field_;
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a[i], b[i]);
  return Poly(f, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  const Field& f = a.field_;
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a[i], b[i]);
  return Poly(f, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  const Field& f = a.field_;
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
    }
  }
  return Poly(f, std::move(v));
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  const Field& f = a.field();
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) return {Poly(f), a};
  std::vector<Elem> q(r.size() - db, 0);
  Elem li = f.inv(bc.back());
  for (std::size_t i = r.size(); i-- > db;) {
    Elem c = f.mul(r[i], li);
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bc[j]));
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::constant(base.field(), 1) % m;
  Poly b = base % m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    e >>= 1;
    if (e) b = mulmod(b, b, m);
  }
  return r;
}

namespace {

// x^{q^i} mod f for i = 0..n
std::vector<Poly> frobenius_powers(const Poly& f, std::size_t n) {
  const Field& fld = f.field();
  std::vector<Poly> out;
  out.push_back(Poly::x(fld) % f);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(powmod(out.back(), fld.order(), f));
  return out;
}

}  // namespace

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  auto frob = frobenius_powers(f, n);
  if (!(frob[n] == frob[0])) return false;
  for (auto l : prime_factors(static_cast<std::uint64_t>(n))) {
    Poly h = frob[n / l] - Poly::x(f.field());
    if (gcd(f, h).degree() != 0) return false;
  }
  return true;
}

std::vector<Elem> split_linear(const Poly& f, std::mt19937_64& rng) {
  const Field& fld = f.field();
  const std::uint64_t q = fld.order();
  std::vector<Elem> out;
  std::vector<Poly> work{f.monic()};
  std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
  while (!work.empty()) {
    Poly g = std::move(work.back());
    work.pop_back();
    if (g.degree() <= 0) continue;
    if (g.degree() == 1) {
      out.push_back(fld.neg(g[0]));
      continue;
    }
    if (static_cast<std::uint64_t>(g.degree()) == q) {
      // g = x^q - x splits as every element; only possible for tiny fields.
      for (std::uint64_t a = 0; a < q; ++a) out.push_back(static_cast<Elem>(a));
      continue;
    }
    for (;;) {
      Poly h(fld);
      if (fld.characteristic() == 2) {
        // Absolute trace map x + x^2 + ... + x^{2^{m-1}}.
        unsigned m = 0;
        for (std::uint64_t t = q; t > 1; t >>= 1) ++m;
        Elem c = 0;
        while (c == 0) c = static_cast<Elem>(pick(rng));
        Poly a = Poly(fld, {0, c}) % g;
        Poly term = a;
        h = a;
        for (unsigned i = 1; i < m; ++i) {
          term = mulmod(term, term, g);
          h = h + term;
        }
      } else {
        Poly shift = Poly(fld, {static_cast<Elem>(pick(rng)), 1});
        h = powmod(shift, (q - 1) / 2, g) - Poly::constant(fld, 1);
      }
      Poly d = gcd(g, h);
      if (d.degree() > 0 && d.degree() < g.degree()) {
        work.push_back(divmod(g, d).quotient);
        work.push_back(std::move(d));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> roots(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "roots of the zero polynomial");
  const Field& fld = f.field();
  Poly m = f.monic();
  if (m.degree() <= 0) return {};
  Poly xq = powmod(Poly::x(fld), fld.order(), m);
  Poly g = gcd(m, xq - Poly::x(fld));
  std::mt19937_64 rng(0x5eed5a11u);
  return split_linear(g, rng);
}

}  // namespace saxl
