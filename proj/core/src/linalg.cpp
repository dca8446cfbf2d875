#include "saxl/linalg.hpp"

#include <string>
#include <utility>

#include "saxl/error.hpp"

namespace saxl {

namespace {

void require_same(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(ErrorKind::FieldMismatch, "operands over different fields");
}

}  // namespace

Vec::Vec(Field field, std::vector<Elem> coords) : field_(std::move(field)), c_(std::move(coords)) {
  for (auto x : c_) {
    if (!field_.contains(x)) throw Error(ErrorKind::InvalidArgument, "vector entry outside field");
  }
}

Vec Vec::unit(const Field& f, std::size_t d, std::size_t i) {
  std::vector<Elem> c(d, 0);
  c.at(i) = 1;
  return Vec(f, std::move(c));
}

bool Vec::is_zero() const {
  for (auto x : c_) {
    if (x != 0) return false;
  }
  return true;
}

Vec Vec::scaled(Elem s) const {
  Vec out = *this;
  for (auto& x : out.c_) x = field_.mul(x, s);
  return out;
}

Vec operator+(const Vec& a, const Vec& b) {
  require_same(a.field_, b.field_);
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
  Vec out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out.c_[i] = a.field_.add(a.c_[i], b.c_[i]);
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same(a.field_, b.field_);
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
  Vec out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out.c_[i] = a.field_.sub(a.c_[i], b.c_[i]);
  return out;
}

Mat::Mat(Field field, std::size_t n, std::vector<Elem> entries)
    : field_(std::move(field)), n_(n), a_(std::move(entries)) {
  if (a_.size() != n_ * n_) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
  for (auto x : a_) {
    if (!field_.contains(x)) throw Error(ErrorKind::InvalidArgument, "matrix entry outside field");
  }
}

Mat Mat::identity(const Field& f, std::size_t n) { return scalar(f, n, 1); }

Mat Mat::scalar(const Field& f, std::size_t n, Elem s) {
  std::vector<Elem> a(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = s;
  return Mat(f, n, std::move(a));
}

Mat Mat::from_rows(const Field& f, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Elem> a;
  a.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
    a.insert(a.end(), r.begin(), r.end());
  }
  return Mat(f, n, std::move(a));
}

std::vector<Elem> Mat::row(std::size_t i) const {
  return std::vector<Elem>(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
}

bool Mat::is_identity() const {
  auto s = as_scalar();
  return s && *s == 1;
}

std::optional<Elem> Mat::as_scalar() const {
  if (n_ == 0) return std::nullopt;
  Elem s = a_[0];
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (a_[i * n_ + j] != (i == j ? s : 0)) return std::nullopt;
    }
  }
  return s;
}

Mat Mat::transpose() const {
  Mat out = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out.a_[j * n_ + i] = a_[i * n_ + j];
  }
  return out;
}

Vec mat_apply(const Vec& v, const Mat& m) {
  require_same(v.field(), m.field());
  if (v.dim() != m.dim()) throw Error(ErrorKind::DimensionMismatch, "vector and matrix sizes differ");
  const Field& f = m.field();
  const std::size_t n = m.dim();
  std::vector<Elem> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Elem c = v[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] = f.add(out[j], f.mul(c, m(i, j)));
  }
  return Vec(f, std::move(out));
}

Mat mat_mul(const Mat& a, const Mat& b) {
  require_same(a.field(), b.field());
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix sizes differ");
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const auto& ae = a.entries();
  const auto& be = b.entries();
  std::vector<Elem> out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Elem c = ae[i * n + k];
      if (c == 0) continue;
      const Elem* brow = &be[k * n];
      Elem* orow = &out[i * n];
      for (std::size_t j = 0; j < n; ++j) orow[j] = f.add(orow[j], f.mul(c, brow[j]));
    }
  }
  return Mat(f, n, std::move(out));
}

Mat mat_add(const Mat& a, const Mat& b) {
  require_same(a.field(), b.field());
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix sizes differ");
  std::vector<Elem> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field().add(a.entries()[i], b.entries()[i]);
  return Mat(a.field(), a.dim(), std::move(out));
}

Mat mat_sub(const Mat& a, const Mat& b) {
  require_same(a.field(), b.field());
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix sizes differ");
  std::vector<Elem> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field().sub(a.entries()[i], b.entries()[i]);
  return Mat(a.field(), a.dim(), std::move(out));
}

Mat mat_scale(const Mat& a, Elem s) {
  std::vector<Elem> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field().mul(a.entries()[i], s);
  return Mat(a.field(), a.dim(), std::move(out));
}

Mat mat_pow(const Mat& m, std::uint64_t e) {
  Mat r = Mat::identity(m.field(), m.dim());
  Mat b = m;
  while (e) {
    if (e & 1) r = mat_mul(r, b);
    e >>= 1;
    if (e) b = mat_mul(b, b);
  }
  return r;
}

Mat mat_inv(const Mat& m) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  std::vector<Elem> a = m.entries();
  std::vector<Elem> inv = Mat::identity(f, n).entries();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
    }
    Elem s = f.inv(a[col * n + col]);
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] = f.mul(a[col * n + j], s);
      inv[col * n + j] = f.mul(inv[col * n + j], s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      Elem c = a[i * n + col];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] = f.sub(a[i * n + j], f.mul(c, a[col * n + j]));
        inv[i * n + j] = f.sub(inv[i * n + j], f.mul(c, inv[col * n + j]));
      }
    }
  }
  return Mat(f, n, std::move(inv));
}

Elem determinant(const Mat& m) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  std::vector<Elem> a = m.entries();
  Elem det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
      det = f.neg(det);
    }
    Elem p = a[col * n + col];
    det = f.mul(det, p);
    Elem pinv = f.inv(p);
    for (std::size_t i = col + 1; i < n; ++i) {
      Elem c = f.mul(a[i * n + col], pinv);
      if (c == 0) continue;
      for (std::size_t j = col; j < n; ++j) a[i * n + j] = f.sub(a[i * n + j], f.mul(c, a[col * n + j]));
    }
  }
  return det;
}

Echelon rref(const Field& f, std::vector<std::vector<Elem>> rows, std::size_t ncols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    Elem s = f.inv(rows[r][col]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      Elem c = rows[i][col];
      if (c == 0) continue;
      for (std::size_t j = col; j < ncols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[r][j]));
    }
    e.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

std::vector<Elem> reduce_against(const Field& f, const Echelon& e, std::vector<Elem> v) {
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    Elem c = v[e.pivots[i]];
    if (c == 0) continue;
    const auto& row = e.rows[i];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, row[j]));
  }
  return v;
}

std::optional<std::vector<Elem>> coordinates_in(const Field& f, const Echelon& e,
                                                std::span<const Elem> v) {
  std::vector<Elem> coeff(e.rows.size(), 0);
  std::vector<Elem> rest(v.begin(), v.end());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    Elem c = rest[e.pivots[i]];
    coeff[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = f.sub(rest[j], f.mul(c, e.rows[i][j]));
  }
  for (auto x : rest) {
    if (x != 0) return std::nullopt;
  }
  return coeff;
}

std::vector<Vec> left_kernel(const Mat& m) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  // v m = 0  <=>  m^T v^T = 0: nullspace of the rows of m^T.
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(j, i);
  }
  Echelon e = rref(f, std::move(rows), n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = f.neg(e.rows[i][free]);
    basis.push_back(std::move(v));
  }
  Echelon canon = rref(f, std::move(basis), n);
  std::vector<Vec> out;
  out.reserve(canon.rows.size());
  for (auto& r : canon.rows) out.emplace_back(f, std::move(r));
  return out;
}

FixedSpace fixed_space(const Mat& m) {
  FixedSpace fs;
  fs.basis = left_kernel(mat_sub(m, Mat::identity(m.field(), m.dim())));
  fs.dim = fs.basis.size();
  return fs;
}

Poly charpoly(const Mat& m) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  std::vector<Elem> h = m.entries();
  auto H = [&](std::size_t i, std::size_t j) -> Elem& { return h[i * n + j]; };

  for (std::size_t col = 1; col + 1 < n; ++col) {
    std::size_t i = col;
    while (i < n && H(i, col - 1) == 0) ++i;
    if (i == n) continue;
    if (i != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(H(i, j), H(col, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(H(j, i), H(j, col));
    }
    Elem t = f.inv(H(col, col - 1));
    for (std::size_t r = col + 1; r < n; ++r) {
      Elem u = f.mul(H(r, col - 1), t);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) H(r, j) = f.sub(H(r, j), f.mul(u, H(col, j)));
      for (std::size_t j = 0; j < n; ++j) H(j, col) = f.add(H(j, col), f.mul(u, H(j, r)));
    }
  }

  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::constant(f, 1));
  for (std::size_t k = 1; k <= n; ++k) {
    Poly next = Poly(f, {f.neg(H(k - 1, k - 1)), 1}) * p[k - 1];
    Elem t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, H(k - i, k - i - 1));
      Elem c = f.mul(t, H(k - i - 1, k - 1));
      if (c != 0) next = next - Poly::constant(f, c) * p[k - i - 1];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

}  // namespace saxl
