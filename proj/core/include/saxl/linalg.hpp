#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "saxl/field.hpp"
#include "saxl/poly.hpp"

namespace saxl {

/// Row vector over a finite field.
class Vec {
 public:
  Vec() = default;
  Vec(Field field, std::vector<Elem> coords);
  static Vec zero(const Field& f, std::size_t d) { return Vec(f, std::vector<Elem>(d, 0)); }
  static Vec unit(const Field& f, std::size_t d, std::size_t i);

  const Field& field() const { return field_; }
  std::size_t dim() const { return c_.size(); }
  const std::vector<Elem>& coords() const { return c_; }
  Elem operator[](std::size_t i) const { return c_[i]; }
  void set(std::size_t i, Elem v) { c_[i] = v; }
  bool is_zero() const;

  Vec scaled(Elem s) const;
  friend Vec operator+(const Vec& a, const Vec& b);
  friend Vec operator-(const Vec& a, const Vec& b);
  friend bool operator==(const Vec& a, const Vec& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  Field field_;
  std::vector<Elem> c_;
};

/// Square matrix, row-major. Vectors act on the left: v -> v * m.
class Mat {
 public:
  Mat() = default;
  Mat(Field field, std::size_t n, std::vector<Elem> entries);
  static Mat identity(const Field& f, std::size_t n);
  static Mat scalar(const Field& f, std::size_t n, Elem s);
  static Mat from_rows(const Field& f, const std::vector<std::vector<Elem>>& rows);

  const Field& field() const { return field_; }
  std::size_t dim() const { return n_; }
  const std::vector<Elem>& entries() const { return a_; }
  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Elem v) { a_[i * n_ + j] = v; }
  std::vector<Elem> row(std::size_t i) const;

  bool is_identity() const;
  /// The scalar s when the matrix is s * identity.
  std::optional<Elem> as_scalar() const;
  Mat transpose() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.a_ == b.a_;
  }

 private:
  Field field_;
  std::size_t n_ = 0;
  std::vector<Elem> a_;
};

Vec mat_apply(const Vec& v, const Mat& m);
Mat mat_mul(const Mat& a, const Mat& b);
/// Throws SingularMatrix.
Mat mat_inv(const Mat& m);
Mat mat_pow(const Mat& m, std::uint64_t e);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, Elem s);

inline Vec operator*(const Vec& v, const Mat& m) { return mat_apply(v, m); }
inline Mat operator*(const Mat& a, const Mat& b) { return mat_mul(a, b); }

Elem determinant(const Mat& m);

/// Reduced row echelon form of a list of rows of equal length. Zero rows are
/// dropped; `pivots[i]` is the pivot column of `rows[i]`.
struct Echelon {
  std::vector<std::vector<Elem>> rows;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return rows.size(); }
};

Echelon rref(const Field& f, std::vector<std::vector<Elem>> rows, std::size_t ncols);

/// Coefficients c with v = sum c_i rows[i], or nullopt when v is not in the span.
std::optional<std::vector<Elem>> coordinates_in(const Field& f, const Echelon& e,
                                                std::span<const Elem> v);

/// Reduces v against an echelon basis; zero result means v lies in the span.
std::vector<Elem> reduce_against(const Field& f, const Echelon& e, std::vector<Elem> v);

/// Basis of {v : v * m = 0}, in reduced row echelon form.
std::vector<Vec> left_kernel(const Mat& m);

struct FixedSpace {
  std::size_t dim = 0;
  std::vector<Vec> basis;
};

/// C_V(m) = {v : v m = v}.
FixedSpace fixed_space(const Mat& m);
inline std::size_t fixed_space_dim(const Mat& m) { return fixed_space(m).dim; }

/// det(x I - m), via Hessenberg reduction.
Poly charpoly(const Mat& m);

}  // namespace saxl
