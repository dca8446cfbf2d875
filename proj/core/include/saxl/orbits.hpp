#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "saxl/modtools.hpp"

namespace saxl {

enum class Tri { False, True, Unknown };
const char* to_string(Tri t);

/// v -> v * g on vectors encoded as sum c_i q^i (coordinate 0 lowest).
/// For q = 2^k this is plain bit packing and the action is a table XOR.
class LinearAction {
 public:
  LinearAction(const Field& field, std::size_t d, std::span<const Mat> generators);
  explicit LinearAction(const ModuleAction& m) : LinearAction(m.field(), m.dim(), m.generators) {}

  const Field& field() const { return f_; }
  std::size_t dim() const { return d_; }
  std::uint64_t size() const { return size_; }
  std::size_t generator_count() const { return gens_.size(); }

  std::uint64_t apply(std::uint64_t v, std::size_t gen) const;
  std::uint64_t encode(const Vec& v) const;
  Vec decode(std::uint64_t v) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;

 private:
  Field f_;
  std::size_t d_ = 0;
  std::uint64_t q_ = 0;
  std::uint64_t size_ = 0;
  std::vector<Mat> gens_;
  bool xor_ = false;
  std::size_t chunks_ = 0;
  std::vector<std::vector<std::uint64_t>> xor_tables_;  // [gen][chunk * 256 + byte]
};

/// Flat bitset over [0, n).
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::uint64_t n) : n_(n), w_((n + 63) / 64, 0) {}
  std::uint64_t size() const { return n_; }
  bool test(std::uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::uint64_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::uint64_t count() const;

 private:
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

inline constexpr std::uint64_t kDefaultOrbitCap = std::uint64_t{1} << 28;

struct OrbitOptions {
  std::uint64_t vector_cap = kDefaultOrbitCap;
  std::uint64_t group_cap = kDefaultGroupCap;
  bool keep_regular_mask = false;
};

struct OrbitSummary {
  std::uint64_t total_vectors = 0;  // |V|
  std::uint64_t group_order = 0;    // |G|
  std::uint64_t orbit_count = 0;
  std::uint64_t regular_count = 0;  // c
  std::map<std::uint64_t, std::uint64_t> size_histogram;
  std::vector<std::uint64_t> regular_reps;  // minimal encodings, ascending
  std::optional<BitSet> regular_mask;       // vectors in regular orbits
};

/// |G| of the ambient group of a module.
std::uint64_t module_group_order(const ModuleAction& m, std::uint64_t cap = kDefaultGroupCap);

/// Exact orbit partition of V. Throws CapExceeded when |V| > vector_cap.
OrbitSummary all_orbits(const ModuleAction& m, const OrbitOptions& opts = {});

struct OrbitProbe {
  std::uint64_t size = 0;
  std::uint64_t min = 0;
};
/// Orbit of one vector, abandoned (size = limit + 1) once it exceeds limit.
OrbitProbe probe_orbit(const LinearAction& act, std::uint64_t v, std::uint64_t limit);

struct SampleResult {
  std::vector<std::uint64_t> reps;  // minimal encodings, distinct orbits
  std::uint64_t trials = 0;
  bool reached_target = false;
};

/// Random vectors with trivial stabiliser, one per orbit, until `target`
/// orbits are found or `budget` trials are used.
SampleResult regular_sample(const ModuleAction& m, std::uint64_t target, std::uint64_t budget,
                            std::uint64_t seed, std::uint64_t group_cap = kDefaultGroupCap);

bool stabiliser_is_trivial(const Vec& v, const ModuleAction& m,
                           std::uint64_t group_cap = kDefaultGroupCap);

/// b(GV) = 2 iff G != 1 has a regular orbit on V. Full enumeration when
/// |V| <= opts.vector_cap, else sampling (True or Unknown only).
Tri has_base2_affine(const ModuleAction& m, const OrbitOptions& opts = {},
                     std::uint64_t sample_budget = 2000, std::uint64_t seed = 1);

struct BaseResult {
  std::vector<Vec> base;
  bool verified = false;
  std::size_t size() const { return base.size(); }
};

/// Order of the pointwise stabiliser of `points` in the ambient group.
std::uint64_t pointwise_stabiliser_order(const ModuleAction& m, std::span<const Vec> points,
                                         std::uint64_t group_cap = kDefaultGroupCap);

/// A base over F_{r^i} for the extended module gives a base of size <= b i
/// over F_r: the F_r-components of each vector along the basis eta.
/// `m` is the module over F_r; `base_ext` lives in F_{r^i}^d under the
/// default embedding. Verified by enumeration when |G| <= group_cap.
BaseResult base_blowdown(const ModuleAction& m, std::span<const Vec> base_ext,
                         std::span<const Elem> eta, std::uint64_t group_cap = kDefaultGroupCap);

}  // namespace saxl
