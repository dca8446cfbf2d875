#include "saxl/eigen.hpp"

#include <algorithm>
#include <numeric>

#include "saxl/error.hpp"
#include "saxl/poly.hpp"

namespace saxl {

Field extension_field(const Field& base, unsigned e) {
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  if (e == 1) return base;
  return Field::make(base.characteristic(), base.degree() * e);
}

FieldEmbedding::FieldEmbedding(Field source, Field target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.characteristic() != target_.characteristic() ||
      target_.degree() % source_.degree() != 0) {
    throw Error(ErrorKind::FieldMismatch, "no embedding between these fields");
  }
  const unsigned k = source_.degree();
  power_images_.resize(k);
  if (k == 1) {
    power_images_[0] = 1;
    return;
  }
  std::vector<Elem> coeffs;
  for (auto c : source_.modulus()) coeffs.push_back(target_.from_int(c));
  auto rts = roots(Poly(target_, coeffs));
  if (rts.empty()) throw Error(ErrorKind::FieldMismatch, "modulus has no root in target field");
  Elem theta = rts.front();
  Elem t = 1;
  for (unsigned i = 0; i < k; ++i) {
    power_images_[i] = t;
    t = target_.mul(t, theta);
  }
}

Elem FieldEmbedding::operator()(Elem a) const {
  if (source_.degree() == 1) return a;
  Elem out = 0;
  auto dg = source_.digits(a);
  for (std::size_t i = 0; i < dg.size(); ++i) {
    if (dg[i] != 0) out = target_.add(out, target_.mul(target_.from_int(dg[i]), power_images_[i]));
  }
  return out;
}

Vec FieldEmbedding::operator()(const Vec& v) const {
  std::vector<Elem> c(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) c[i] = (*this)(v[i]);
  return Vec(target_, std::move(c));
}

Mat FieldEmbedding::operator()(const Mat& m) const {
  std::vector<Elem> a(m.entries().size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (*this)(m.entries()[i]);
  return Mat(target_, m.dim(), std::move(a));
}

std::uint64_t matrix_order(const Mat& m, std::uint64_t limit) {
  if (determinant(m) == 0) throw Error(ErrorKind::SingularMatrix, "singular matrix has no order");
  Mat x = m;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (x.is_identity()) return n;
    x = mat_mul(x, m);
  }
  throw Error(ErrorKind::CapExceeded, "matrix order exceeds limit");
}

std::size_t EigenPartition::total() const {
  std::size_t s = 0;
  for (const auto& [ev, dim] : parts) s += dim;
  return s;
}

std::vector<std::size_t> EigenPartition::dims() const {
  std::vector<std::size_t> out;
  for (const auto& [ev, dim] : parts) out.push_back(dim);
  return out;
}

std::size_t EigenPartition::dim_of(Elem eigenvalue) const {
  for (const auto& [ev, dim] : parts) {
    if (ev == eigenvalue) return dim;
  }
  return 0;
}

unsigned eigen_extension_degree(std::uint64_t q, std::uint32_t p, std::uint64_t n) {
  while (n % p == 0) n /= p;
  if (n <= 1) return 1;
  return static_cast<unsigned>(multiplicative_order_mod(q % n, n));
}

namespace {

void sort_parts(std::vector<std::pair<Elem, std::size_t>>& parts) {
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
}

}  // namespace

EigenPartition make_eigen_partition(std::size_t d, const Field& base, unsigned ext_degree,
                                    std::vector<std::pair<Elem, std::size_t>> parts) {
  EigenPartition ep;
  ep.d = d;
  ep.ext_degree = ext_degree;
  ep.ext_field = extension_field(base, ext_degree);
  for (const auto& [ev, dim] : parts) {
    if (dim == 0) throw Error(ErrorKind::InvalidArgument, "eigenspace dimension must be >= 1");
    if (!ep.ext_field.contains(ev) || ev == 0) {
      throw Error(ErrorKind::InvalidArgument, "eigenvalue outside the extension field");
    }
  }
  ep.parts = std::move(parts);
  sort_parts(ep.parts);
  if (ep.total() > d) throw Error(ErrorKind::InvalidArgument, "eigenspace dimensions exceed d");
  return ep;
}

EigenPartition eigen_partition(const Mat& m, unsigned max_ext) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  const std::uint64_t ord = matrix_order(m);
  const unsigned e = eigen_extension_degree(f.order(), f.characteristic(), ord);
  if (e > max_ext) {
    throw Error(ErrorKind::InsufficientExtension,
                "eigenvalues need degree " + std::to_string(e) + " extension, bound is " +
                    std::to_string(max_ext));
  }
  EigenPartition ep;
  ep.d = n;
  ep.ext_degree = e;
  ep.ext_field = extension_field(f, e);
  const FieldEmbedding emb(f, ep.ext_field);
  const Field& L = ep.ext_field;

  Poly cp = charpoly(m);
  std::vector<Elem> lifted;
  for (auto c : cp.coeffs()) lifted.push_back(emb(c));
  Poly cpl(L, lifted);
  // gcd(charpoly, x^{Q-1} - 1) keeps exactly the nonzero eigenvalues in L.
  Poly xq1 = powmod(Poly::x(L), L.order() - 1, cpl) - Poly::constant(L, 1);
  Poly g = gcd(cpl, xq1);
  std::mt19937_64 rng(0xe16e0u);
  auto eigenvalues = split_linear(g, rng);

  const Mat ml = emb(m);
  for (Elem k : eigenvalues) {
    Mat shifted = mat_sub(ml, Mat::scalar(L, n, k));
    std::size_t dim = left_kernel(shifted).size();
    if (dim > 0) ep.parts.emplace_back(k, dim);
  }
  sort_parts(ep.parts);
  return ep;
}

}  // namespace saxl
