#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "saxl/fixtures.hpp"
#include "saxl/verify.hpp"

namespace saxl {

enum class CaseStatus { Open, NoRegularOrbit, StarEstablished };
const char* to_string(CaseStatus s);

struct FixtureRef {
  std::string path;  // relative to the fixtures directory
  unsigned extend = 1;
  friend bool operator==(const FixtureRef&, const FixtureRef&) = default;
};

struct CaseRecord {
  std::string id;
  std::string source;  // "1", "3", "4" or "prose"
  std::string socle;
  std::string layer;   // E(G)
  std::string group;   // display form, e.g. "Z x M11"
  std::string z;       // Z options as written: "any", "1", "!=1", "2", ...
  bool outer = false;  // G/Z(G) contains outer automorphisms
  unsigned d = 0;
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> R;  // threshold rows
  CaseStatus status = CaseStatus::Open;
  std::optional<Technique> technique;  // claimed
  std::optional<std::string> reason;   // why no regular orbit
  std::string layer_order;             // |E(G)|, doubled when outer
  std::vector<FixtureRef> fixtures;
  std::vector<std::uint64_t> z_run;    // orders of Z to execute
  std::optional<std::string> class_source;
  std::string note;

  void validate() const;
  friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

json case_to_json(const CaseRecord& c);
CaseRecord case_from_json(const json& j, std::size_t index = 0);

/// Throws Schema with the offending case index and field.
std::vector<CaseRecord> parse_registry(const json& j);
std::vector<CaseRecord> load_registry(const std::filesystem::path& path);
std::vector<CaseRecord> load_builtin_registry();
json registry_to_json(const std::vector<CaseRecord>& cases);

/// Registry compiled into the library.
std::string_view builtin_registry_text();

/// Sporadic groups whose outer automorphism group is trivial.
bool has_trivial_outer(std::string_view socle);

struct RunPolicy {
  /// Techniques after the claimed one: "t3", "t1", "t2", "t4".
  std::vector<std::string> order{"t3", "t1", "t2", "t4"};
  bool claimed_first = true;
  std::uint64_t seed = 1;
  std::uint64_t t3_full_cap = std::uint64_t{1} << 24;
  std::uint64_t t4_cap = std::uint64_t{1} << 26;
  std::uint64_t group_cap = 2'000'000;
};

enum class Outcome { Match, Mismatch, Skipped, NotRunnable };
const char* to_string(Outcome o);

struct CaseResult {
  CaseRecord record;
  Verdict verdict;
  Outcome outcome = Outcome::NotRunnable;
  std::string detail;
};

CaseResult run_case(const CaseRecord& c, const std::filesystem::path& fixtures,
                    const RunPolicy& policy = {});

struct RunReport {
  std::vector<CaseResult> results;
  std::size_t count(Outcome o) const;
  std::vector<const CaseResult*> mismatches() const;
  /// 0 iff no mismatches among runnable cases.
  int exit_code() const { return mismatches().empty() ? 0 : 1; }
};

/// Runs cases on `jobs` worker threads; result order follows `cases`.
RunReport run_all(const std::vector<CaseRecord>& cases, const std::filesystem::path& fixtures,
                  const RunPolicy& policy = {}, unsigned jobs = 1);

std::string report_text(const RunReport& r);
json report_json(const RunReport& r);

}  // namespace saxl
