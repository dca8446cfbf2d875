#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "saxl/field.hpp"
#include "saxl/linalg.hpp"

namespace saxl {

/// F_{q^e} over the same prime field, default modulus.
Field extension_field(const Field& base, unsigned e);

/// The embedding F_q -> F_{q^e} that sends the generator x of F_q to the
/// least root (by encoding) of the F_q modulus in F_{q^e}.
class FieldEmbedding {
 public:
  FieldEmbedding(Field source, Field target);

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  Elem operator()(Elem a) const;
  Vec operator()(const Vec& v) const;
  Mat operator()(const Mat& m) const;

 private:
  Field source_;
  Field target_;
  std::vector<Elem> power_images_;  // images of x^i for i < k
};

/// Least n >= 1 with m^n = 1. Throws CapExceeded beyond `limit`.
std::uint64_t matrix_order(const Mat& m, std::uint64_t limit = 1'000'000);

/// Eigenspace dimensions of a finite-order matrix over the extension
/// F_{q^e} that contains all of its eigenvalues.
struct EigenPartition {
  std::size_t d = 0;
  unsigned ext_degree = 1;
  Field ext_field;
  /// (eigenvalue in ext_field, geometric multiplicity), sorted by
  /// decreasing multiplicity, ties by eigenvalue encoding.
  std::vector<std::pair<Elem, std::size_t>> parts;

  std::size_t total() const;
  std::vector<std::size_t> dims() const;
  /// Multiplicity of eigenvalue 1, i.e. dim C_V(m).
  std::size_t dim_of(Elem eigenvalue) const;
};

/// Degree e of the extension that splits every eigenvalue of a matrix of
/// order n over F_q: the order of q modulo the p'-part of n.
unsigned eigen_extension_degree(std::uint64_t q, std::uint32_t p, std::uint64_t n);

/// Throws InsufficientExtension when the needed degree exceeds max_ext.
EigenPartition eigen_partition(const Mat& m, unsigned max_ext = 16);

/// Builds an EigenPartition from ingested data; sorts parts canonically.
EigenPartition make_eigen_partition(std::size_t d, const Field& base, unsigned ext_degree,
                                    std::vector<std::pair<Elem, std::size_t>> parts);

}  // namespace saxl
