#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "saxl/bounds.hpp"
#include "saxl/orbits.hpp"

namespace saxl {

enum class Technique { T1, T2, T3, T4, Oracle, None };
const char* to_string(Technique t);
/// Accepts t1..t4, oracle, none (case-insensitive).
std::optional<Technique> parse_technique(std::string_view s);

struct Evidence {
  std::optional<std::string> sigma;        // exact rational p/q
  std::optional<double> sigma_ratio;       // 2 sigma / |V|
  std::optional<std::uint64_t> regular_count;  // c (full) or orbits found (sample)
  std::optional<std::uint64_t> cover_size;     // |R| for t4
  std::optional<std::uint64_t> valency;        // oracle
  std::optional<std::string> r_threshold;      // screening, decimal
  std::string group_order;                     // decimal
  std::string total_vectors;                   // decimal
  std::string note;
};

struct Verdict {
  std::string case_id;
  Technique technique = Technique::None;
  Tri star_holds = Tri::Unknown;
  Tri b2 = Tri::Unknown;
  Evidence evidence;
  double runtime_s = 0.0;

  bool conclusive() const { return star_holds != Tri::Unknown || b2 != Tri::Unknown; }
  /// Throws when star_holds is true without b2, or a technique is recorded
  /// for an inconclusive verdict.
  void validate() const;
};

BigInt vector_count(const ModuleAction& m);

struct ClassInput {
  /// Prime-order classes with eigen data; computed from the group when empty.
  std::vector<ClassDatum> classes;
  bool computed = false;
};

/// Classes of G/(G cap scalars) for the module action.
std::vector<ClassDatum> module_classes(const ModuleAction& m, const ClassOptions& opts = {});

/// Exact eigenspace sums; star holds when 2 sigma < |V|.
Verdict t1(const ModuleAction& m, std::span<const ClassDatum> classes);
Verdict t1(const ModuleAction& m);
/// Same rule with sigma from d, r and class data only.
Verdict t1_from_data(unsigned d, const BigInt& r, std::span<const ClassDatum> classes);
/// Mixed sigma: unipotent classes by alpha, the rest exact.
Verdict t2(unsigned d, const BigInt& r, std::span<const ClassDatum> classes);
Verdict t2(const ModuleAction& m);

enum class T3Mode { Full, Sample };
struct T3Options {
  T3Mode mode = T3Mode::Full;
  std::uint64_t seed = 1;
  std::uint64_t budget = 20000;  // sample trials
  OrbitOptions orbit;
};
/// star holds iff 2 m |G| >= |V| for m regular orbits (counted or found).
Verdict t3(const ModuleAction& m, const T3Options& opts = {});

struct T4Options {
  std::uint64_t seed = 1;
  std::uint64_t initial = 64;
  std::uint64_t max_set = std::uint64_t{1} << 16;
  std::uint64_t budget = 1'000'000;        // sampling trials
  std::uint64_t mask_cap = std::uint64_t{1} << 26;  // full enumeration for membership
  std::uint64_t vector_cap = std::uint64_t{1} << 26;
};
/// Every vector is a sum of two regular vectors, one of them from a sampled
/// set R that doubles until the cover is complete.
Verdict t4(const ModuleAction& m, const T4Options& opts = {});

struct OracleOptions {
  std::uint64_t vector_cap = std::uint64_t{1} << 20;
};
/// Exact decision over all of V; valency of the Saxl graph is |S*|.
Verdict oracle(const ModuleAction& m, const OracleOptions& opts = {});

/// Default chain: t3-full when |V| <= 2^24 and |G| is enumerable, then t1,
/// t2 and t4-sample. Stops at the first verdict with star_holds known, or
/// with b2 false.
Verdict verify_auto(const ModuleAction& m, std::uint64_t seed = 1);

}  // namespace saxl
