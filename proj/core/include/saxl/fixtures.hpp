#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "saxl/bounds.hpp"
#include "saxl/modtools.hpp"
#include "saxl/orbits.hpp"
#include "saxl/verify.hpp"

namespace saxl {

using json = nlohmann::json;

/// Reads and parses a JSON file. Throws Io or Schema.
json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path, const json& j);

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j, const Field& f);

json labels_to_json(const GroupLabels& l);
GroupLabels labels_from_json(const json& j);

/// {"kind": "matrix_group", "field": {...}, "d", "generators", ...}
json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const json& j);

/// {"kind": "permutation_group", "degree", "generators": 1-based images}
struct PermFixture {
  std::size_t degree = 0;
  std::vector<Permutation> generators;  // 0-based
  GroupLabels labels;
  std::optional<std::uint64_t> known_order;
};
json perm_to_json(const PermFixture& p);
PermFixture perm_from_json(const json& j);
/// Permutation matrices over F_p (a faithful matrix group).
GroupSpec perm_group_spec(const PermFixture& p, const Field& f);

/// Prime-order class data of G/Z for a d-dimensional module over a field.
struct ClassFixture {
  GroupLabels labels;
  Field field;
  std::size_t d = 0;
  std::vector<ClassDatum> classes;
};
json classes_to_json(const ClassFixture& c);
ClassFixture classes_from_json(const json& j);

/// A matrix group fixture read as its natural module, or a permutation
/// fixture read as permutation matrices over F_2.
ModuleAction load_module(const std::filesystem::path& path);

json orbit_summary_to_json(const OrbitSummary& s, const LinearAction& act,
                           std::size_t max_reps = 1000);
json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);

/// Throws Schema as "where: what".
[[noreturn]] void schema_error(const std::string& where, const std::string& what);

}  // namespace saxl
