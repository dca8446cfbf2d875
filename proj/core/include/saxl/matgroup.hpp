#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "saxl/eigen.hpp"
#include "saxl/field.hpp"
#include "saxl/linalg.hpp"

namespace saxl {

struct GroupLabels {
  std::string socle;    // S = soc(G/Z(G)), e.g. "M11"
  std::string layer;    // E(G), e.g. "2.M12"
  std::string display;  // free text, e.g. "Z x M11"
};

/// A matrix group G <= GL(d, q) given by generators.
struct GroupSpec {
  Field field;
  std::size_t d = 0;
  std::vector<Mat> generators;
  /// Order of the adjoined scalar subgroup Z <= F_q^x (1 if none).
  std::uint64_t scalar_order = 1;
  GroupLabels labels;
  std::optional<std::uint64_t> known_order;

  /// Throws on a violated invariant.
  void validate() const;
  std::uint64_t vector_count() const;  // q^d, throws if it overflows 64 bits
};

struct MatKeyHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept;
};

/// All elements of a group, found by breadth-first closure under the
/// generators. elements()[0] is the identity.
class Enumeration {
 public:
  Enumeration(Field field, std::size_t d) : field_(std::move(field)), d_(d) {}

  const std::vector<Mat>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }
  std::optional<std::size_t> index_of(const Mat& m) const;
  /// Appends m if new; returns its index.
  std::pair<std::size_t, bool> insert(Mat m);

 private:
  Field field_;
  std::size_t d_;
  std::vector<Mat> elements_;
  std::unordered_map<std::vector<Elem>, std::uint32_t, MatKeyHash> index_;
};

inline constexpr std::uint64_t kDefaultGroupCap = 10'000'000;

/// Throws CapExceeded when the closure grows past `cap`.
Enumeration enumerate(const GroupSpec& g, std::uint64_t cap = kDefaultGroupCap);

/// |G|: the known order when present, otherwise by enumeration.
std::uint64_t group_order(const GroupSpec& g, std::uint64_t cap = kDefaultGroupCap);

std::uint64_t element_order(const Mat& m);
/// Least n with m^n a scalar matrix (any scalar of F_q^x).
std::uint64_t projective_order(const Mat& m);

/// Canonical representative of the coset m * F_q^x: first nonzero entry in
/// row-major order scaled to 1.
Mat projective_normalize(const Mat& m);

/// One conjugacy class of H = G/Z for the prime-order classes of H.
struct ClassDatum {
  std::string label;
  std::uint64_t element_order = 0;  // prime order of hZ in H
  std::uint64_t class_size = 0;     // |h^H|
  unsigned alpha = 2;
  std::optional<Mat> rep;  // a lift in G
  std::optional<EigenPartition> eigen;
  bool is_unipotent = false;  // element_order == characteristic
};

/// A conjugacy class of H of any order (for the class equation).
struct ProjectiveClass {
  Mat rep;
  std::uint64_t size = 0;
  std::uint64_t order = 0;
};

struct ClassOptions {
  std::uint64_t cap = 1'000'000;  // on |G|
  bool compute_eigen = true;
  unsigned max_ext = 16;
};

/// All conjugacy classes of H = G / (G cap scalars), brute force.
struct ProjectiveClassTable {
  std::uint64_t group_order = 0;   // |G|
  std::uint64_t h_order = 0;       // |H|
  std::vector<ProjectiveClass> classes;
};
ProjectiveClassTable projective_classes(const GroupSpec& g, const ClassOptions& opts = {});

/// Prime-order classes of H with sizes, lifts, alpha values and (optionally)
/// eigenspace data. Labelled "<order><letter>", letters by increasing size.
std::vector<ClassDatum> prime_order_classes(const GroupSpec& g, const ClassOptions& opts = {});

/// Appends a scalar generator of multiplicative order z. Throws when z does
/// not divide q - 1. known_order is cleared unless z == 1.
GroupSpec adjoin_scalars(const GroupSpec& g, std::uint64_t z);

/// Product replacement walk with an accumulator ("rattle" variant).
class ProductReplacement {
 public:
  ProductReplacement(const GroupSpec& g, std::uint64_t seed, std::size_t slots = 10,
                     unsigned burn_in = 50);
  Mat next();

 private:
  std::vector<Mat> slots_;
  Mat acc_;
  std::mt19937_64 rng_;
};

/// First output of a product replacement walk seeded with `seed`.
Mat random_element(const GroupSpec& g, std::uint64_t seed);

}  // namespace saxl
