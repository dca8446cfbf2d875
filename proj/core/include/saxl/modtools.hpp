#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "saxl/linalg.hpp"
#include "saxl/matgroup.hpp"

namespace saxl {

/// 0-based images: perm[i] is the image of point i.
using Permutation = std::vector<std::uint32_t>;

/// Action of a group on an invariant subspace of its natural module.
struct ModuleAction {
  GroupSpec group;             // ambient action
  std::vector<Vec> basis;      // rows in ambient coordinates, RREF
  std::vector<Mat> generators; // action on `basis`, one per group generator

  std::size_t dim() const { return basis.size(); }
  const Field& field() const { return group.field; }
  /// The restricted action as a group in its own right (same scalars, labels
  /// and known order, which is only valid for faithful modules).
  GroupSpec as_group() const;
  void validate() const;
};

/// The natural module of g.
ModuleAction natural_module(const GroupSpec& g);

/// Throws InvalidArgument on degree mismatch or a non-bijection.
ModuleAction perm_module(std::span<const Permutation> perms, const Field& field);
Mat permutation_matrix(const Permutation& perm, const Field& field);

/// Sum-zero subspace of a permutation module.
ModuleAction deleted_module(const ModuleAction& m);

/// Smallest invariant subspace containing seed (module coordinates), RREF.
std::vector<Vec> spin(const Vec& seed, std::span<const Mat> generators);
std::vector<Vec> spin(const Vec& seed, const ModuleAction& m);

/// Action on an invariant subspace given in module coordinates.
ModuleAction submodule(const ModuleAction& m, const std::vector<Vec>& sub);
/// Action on m / sub, as a new ambient module.
ModuleAction quotient(const ModuleAction& m, const std::vector<Vec>& sub);

/// Some proper nonzero invariant subspace found from kernels of random
/// group algebra elements (module or dual), or empty.
std::vector<Vec> find_submodule(const ModuleAction& m, unsigned attempts, std::uint64_t seed);

/// Heuristic irreducibility check: kernel vectors of `seeds` random algebra
/// elements all spin to the full module, and likewise for the dual.
bool spin_irreducible(const ModuleAction& m, unsigned seeds = 20, std::uint64_t seed = 1);

struct SplitResult {
  std::vector<ModuleAction> constituents;
  bool complete = true;  // every constituent passed spin_irreducible
};

/// Composition factors, largest first (ties keep discovery order).
SplitResult split(const ModuleAction& m, unsigned attempts, std::uint64_t seed);

/// Same matrices over F_{q^e}.
ModuleAction scalar_extend(const ModuleAction& m, unsigned e);

/// Action on the exterior square, as a new ambient module. Basis e_i ^ e_j
/// for i < j in lexicographic order.
ModuleAction exterior_square(const ModuleAction& m);

/// Random element of the group algebra: 3 to 6 words of length at most 8
/// with random nonzero coefficients.
Mat random_algebra_element(std::span<const Mat> generators, std::mt19937_64& rng);

}  // namespace saxl
