#include "saxl/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "saxl/error.hpp"

namespace saxl {

void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Schema, where + ": " + what);
}

namespace {

template <typename T>
T get(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) schema_error(where, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    schema_error(where + "." + key, e.what());
  }
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get<T>(j, key, where);
}

}  // namespace

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw Error(ErrorKind::Schema, path.string() + ": empty file");
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line number
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()); ++i) line += text[i] == '\n';
    throw Error(ErrorKind::Schema, path.string() + ":" + std::to_string(line) + ": " + e.what());
  }
}

void save_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << j.dump(1) << "\n";
}

json field_to_json(const Field& f) {
  json j{{"p", f.characteristic()}, {"k", f.degree()}};
  if (f.degree() > 1) j["modulus"] = f.modulus();
  return j;
}

Field field_from_json(const json& j) {
  auto p = get<std::uint32_t>(j, "p", "field");
  auto k = get_opt<unsigned>(j, "k", "field").value_or(1);
  auto mod = get_opt<std::vector<Elem>>(j, "modulus", "field");
  return Field::make(p, k, mod);
}

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) rows.push_back(m.row(i));
  return rows;
}

Mat mat_from_json(const json& j, const Field& f) {
  std::vector<std::vector<Elem>> rows;
  try {
    rows = j.get<std::vector<std::vector<Elem>>>();
  } catch (const json::exception& e) {
    schema_error("matrix", e.what());
  }
  for (const auto& r : rows) {
    if (r.size() != rows.size()) schema_error("matrix", "not square");
    for (auto x : r) {
      if (!f.contains(x)) schema_error("matrix", "entry " + std::to_string(x) + " not in " + f.name());
    }
  }
  return Mat::from_rows(f, rows);
}

json labels_to_json(const GroupLabels& l) {
  return {{"socle", l.socle}, {"layer", l.layer}, {"display", l.display}};
}

GroupLabels labels_from_json(const json& j) {
  GroupLabels l;
  if (!j.is_object()) return l;
  l.socle = get_opt<std::string>(j, "socle", "labels").value_or("");
  l.layer = get_opt<std::string>(j, "layer", "labels").value_or("");
  l.display = get_opt<std::string>(j, "display", "labels").value_or("");
  return l;
}

json group_to_json(const GroupSpec& g) {
  json gens = json::array();
  for (const auto& m : g.generators) gens.push_back(mat_to_json(m));
  json j{{"kind", "matrix_group"},
         {"field", field_to_json(g.field)},
         {"d", g.d},
         {"generators", gens},
         {"scalar_order", g.scalar_order},
         {"labels", labels_to_json(g.labels)}};
  if (g.known_order) j["known_order"] = *g.known_order;
  return j;
}

GroupSpec group_from_json(const json& j) {
  if (get_opt<std::string>(j, "kind", "group").value_or("matrix_group") != "matrix_group") {
    schema_error("group.kind", "expected matrix_group");
  }
  GroupSpec g;
  g.field = field_from_json(get<json>(j, "field", "group"));
  g.d = get<std::size_t>(j, "d", "group");
  const auto gens = get<json>(j, "generators", "group");
  if (!gens.is_array()) schema_error("group.generators", "expected an array");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    try {
      g.generators.push_back(mat_from_json(gens[i], g.field));
    } catch (const Error& e) {
      schema_error("group.generators[" + std::to_string(i) + "]", e.what());
    }
  }
  g.scalar_order = get_opt<std::uint64_t>(j, "scalar_order", "group").value_or(1);
  if (j.contains("labels")) g.labels = labels_from_json(j["labels"]);
  g.known_order = get_opt<std::uint64_t>(j, "known_order", "group");
  g.validate();
  return g;
}

json perm_to_json(const PermFixture& p) {
  json gens = json::array();
  for (const auto& g : p.generators) {
    json img = json::array();
    for (auto x : g) img.push_back(x + 1);
    gens.push_back(img);
  }
  json j{{"kind", "permutation_group"},
         {"degree", p.degree},
         {"generators", gens},
         {"labels", labels_to_json(p.labels)}};
  if (p.known_order) j["known_order"] = *p.known_order;
  return j;
}

PermFixture perm_from_json(const json& j) {
  PermFixture p;
  p.degree = get<std::size_t>(j, "degree", "permutation_group");
  auto gens = get<std::vector<std::vector<std::uint32_t>>>(j, "generators", "permutation_group");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "permutation_group.generators[" + std::to_string(i) + "]";
    if (gens[i].size() != p.degree) schema_error(where, "length differs from degree");
    Permutation perm;
    std::vector<bool> seen(p.degree, false);
    for (auto x : gens[i]) {
      if (x < 1 || x > p.degree || seen[x - 1]) schema_error(where, "not a permutation of 1..degree");
      seen[x - 1] = true;
      perm.push_back(x - 1);
    }
    p.generators.push_back(std::move(perm));
  }
  if (j.contains("labels")) p.labels = labels_from_json(j["labels"]);
  p.known_order = get_opt<std::uint64_t>(j, "known_order", "permutation_group");
  return p;
}

GroupSpec perm_group_spec(const PermFixture& p, const Field& f) {
  GroupSpec g = perm_module(p.generators, f).group;
  g.labels = p.labels;
  g.known_order = p.known_order;
  return g;
}

json classes_to_json(const ClassFixture& c) {
  json arr = json::array();
  for (const auto& k : c.classes) {
    json e{{"label", k.label},
           {"order", k.element_order},
           {"size", k.class_size},
           {"alpha", k.alpha},
           {"unipotent", k.is_unipotent}};
    if (k.eigen) {
      json parts = json::array();
      for (const auto& [ev, dim] : k.eigen->parts) parts.push_back({ev, dim});
      e["eigen"] = {{"ext_degree", k.eigen->ext_degree}, {"parts", parts}};
    }
    arr.push_back(e);
  }
  return {{"kind", "class_data"},
          {"labels", labels_to_json(c.labels)},
          {"field", field_to_json(c.field)},
          {"d", c.d},
          {"classes", arr}};
}

ClassFixture classes_from_json(const json& j) {
  ClassFixture c;
  if (j.contains("labels")) c.labels = labels_from_json(j["labels"]);
  c.field = field_from_json(get<json>(j, "field", "class_data"));
  c.d = get<std::size_t>(j, "d", "class_data");
  const auto arr = get<json>(j, "classes", "class_data");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "class_data.classes[" + std::to_string(i) + "]";
    const json& e = arr[i];
    ClassDatum k;
    k.label = get<std::string>(e, "label", where);
    k.element_order = get<std::uint64_t>(e, "order", where);
    k.class_size = get<std::uint64_t>(e, "size", where);
    if (!is_prime(k.element_order)) schema_error(where, "order is not prime");
    auto a = get_opt<unsigned>(e, "alpha", where);
    k.alpha = a ? *a : alpha_of(c.labels.socle, k.label, k.element_order);
    k.is_unipotent = get_opt<bool>(e, "unipotent", where)
                         .value_or(k.element_order == c.field.characteristic());
    if (e.contains("eigen")) {
      const json& ej = e["eigen"];
      auto ext = get<unsigned>(ej, "ext_degree", where + ".eigen");
      auto parts = get<std::vector<std::pair<Elem, std::size_t>>>(ej, "parts", where + ".eigen");
      try {
        k.eigen = make_eigen_partition(c.d, c.field, ext, std::move(parts));
      } catch (const Error& err) {
        schema_error(where + ".eigen", err.what());
      }
    }
    c.classes.push_back(std::move(k));
  }
  return c;
}

ModuleAction load_module(const std::filesystem::path& path) {
  json j = load_json_file(path);
  try {
    const std::string kind = j.value("kind", "matrix_group");
    if (kind == "matrix_group") return natural_module(group_from_json(j));
    if (kind == "permutation_group") {
      return natural_module(perm_group_spec(perm_from_json(j), Field::prime(2)));
    }
    schema_error("kind", "unsupported fixture kind '" + kind + "'");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Schema) throw Error(ErrorKind::Schema, path.string() + ": " + e.what());
    throw;
  }
}

json orbit_summary_to_json(const OrbitSummary& s, const LinearAction& act, std::size_t max_reps) {
  json hist = json::array();
  for (const auto& [size, mult] : s.size_histogram) hist.push_back({{"size", size}, {"count", mult}});
  json reps = json::array();
  for (std::size_t i = 0; i < s.regular_reps.size() && i < max_reps; ++i) {
    reps.push_back(act.decode(s.regular_reps[i]).coords());
  }
  return {{"total_vectors", s.total_vectors},
          {"group_order", s.group_order},
          {"orbit_count", s.orbit_count},
          {"regular_count", s.regular_count},
          {"size_histogram", hist},
          {"regular_representatives", reps},
          {"representatives_truncated", s.regular_reps.size() > max_reps}};
}

namespace {

Tri tri_from(const std::string& s) {
  if (s == "true") return Tri::True;
  if (s == "false") return Tri::False;
  if (s == "unknown") return Tri::Unknown;
  schema_error("verdict", "bad tri-state '" + s + "'");
}

}  // namespace

json verdict_to_json(const Verdict& v) {
  json ev = json::object();
  if (v.evidence.sigma) ev["sigma"] = *v.evidence.sigma;
  if (v.evidence.sigma_ratio) ev["sigma_ratio"] = *v.evidence.sigma_ratio;
  if (v.evidence.regular_count) ev["regular_count"] = *v.evidence.regular_count;
  if (v.evidence.cover_size) ev["cover_size"] = *v.evidence.cover_size;
  if (v.evidence.valency) ev["valency"] = *v.evidence.valency;
  if (v.evidence.r_threshold) ev["r_threshold"] = *v.evidence.r_threshold;
  if (!v.evidence.group_order.empty()) ev["group_order"] = v.evidence.group_order;
  if (!v.evidence.total_vectors.empty()) ev["total_vectors"] = v.evidence.total_vectors;
  if (!v.evidence.note.empty()) ev["note"] = v.evidence.note;
  return {{"case_id", v.case_id},
          {"technique", to_string(v.technique)},
          {"star_holds", to_string(v.star_holds)},
          {"b2", to_string(v.b2)},
          {"evidence", ev},
          {"runtime_s", v.runtime_s}};
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.case_id = get<std::string>(j, "case_id", "verdict");
  auto t = parse_technique(get<std::string>(j, "technique", "verdict"));
  if (!t) schema_error("verdict.technique", "unknown technique");
  v.technique = *t;
  v.star_holds = tri_from(get<std::string>(j, "star_holds", "verdict"));
  v.b2 = tri_from(get<std::string>(j, "b2", "verdict"));
  v.runtime_s = get_opt<double>(j, "runtime_s", "verdict").value_or(0.0);
  if (j.contains("evidence")) {
    const json& e = j["evidence"];
    v.evidence.sigma = get_opt<std::string>(e, "sigma", "evidence");
    v.evidence.sigma_ratio = get_opt<double>(e, "sigma_ratio", "evidence");
    v.evidence.regular_count = get_opt<std::uint64_t>(e, "regular_count", "evidence");
    v.evidence.cover_size = get_opt<std::uint64_t>(e, "cover_size", "evidence");
    v.evidence.valency = get_opt<std::uint64_t>(e, "valency", "evidence");
    v.evidence.r_threshold = get_opt<std::string>(e, "r_threshold", "evidence");
    v.evidence.group_order = get_opt<std::string>(e, "group_order", "evidence").value_or("");
    v.evidence.total_vectors = get_opt<std::string>(e, "total_vectors", "evidence").value_or("");
    v.evidence.note = get_opt<std::string>(e, "note", "evidence").value_or("");
  }
  return v;
}

}  // namespace saxl
