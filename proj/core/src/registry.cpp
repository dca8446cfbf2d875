#include "saxl/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "saxl/error.hpp"

namespace saxl {

const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Open:
      return "open";
    case CaseStatus::NoRegularOrbit:
      return "no_regular_orbit";
    case CaseStatus::StarEstablished:
      return "star_established";
  }
  return "open";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Match:
      return "match";
    case Outcome::Mismatch:
      return "MISMATCH";
    case Outcome::Skipped:
      return "skipped";
    case Outcome::NotRunnable:
      return "not-runnable";
  }
  return "not-runnable";
}

namespace {

CaseStatus status_from(const std::string& s, const std::string& where) {
  if (s == "open") return CaseStatus::Open;
  if (s == "no_regular_orbit") return CaseStatus::NoRegularOrbit;
  if (s == "star_established") return CaseStatus::StarEstablished;
  schema_error(where + ".status", "unknown status '" + s + "'");
}

template <typename T>
T field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) schema_error(where, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    schema_error(where + "." + key, e.what());
  }
}

template <typename T>
std::optional<T> opt_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<T>(j, key, where);
}

}  // namespace

void CaseRecord::validate() const {
  const std::string where = "case '" + id + "'";
  if (id.empty()) schema_error("case", "empty id");
  if (source != "1" && source != "3" && source != "4" && source != "prose") {
    schema_error(where + ".source", "must be 1, 3, 4 or prose");
  }
  if (d < 1) schema_error(where + ".d", "must be positive");
  if (status == CaseStatus::Open && source != "1") schema_error(where, "open status needs source 1");
  if (source == "1" && status != CaseStatus::Open) schema_error(where, "source 1 cases must be open");
  if (status == CaseStatus::NoRegularOrbit && source != "4" && !reason) {
    schema_error(where, "no_regular_orbit needs source 4 or a reason");
  }
  if (R && *R < 1) schema_error(where + ".R", "must be positive");
  if (!r && !R) schema_error(where, "needs r or R");
  if (r && R) schema_error(where, "r and R are exclusive");
  if (layer_order.empty() || layer_order.find_first_not_of("0123456789") != std::string::npos) {
    schema_error(where + ".layer_order", "must be a decimal integer");
  }
  for (const auto& f : fixtures) {
    if (f.extend < 1) schema_error(where + ".fixtures", "extend must be >= 1");
  }
}

json case_to_json(const CaseRecord& c) {
  json fx = json::array();
  for (const auto& f : c.fixtures) fx.push_back({{"path", f.path}, {"extend", f.extend}});
  auto opt = [](const auto& o) -> json { return o ? json(*o) : json(nullptr); };
  return {{"id", c.id},
          {"source", c.source},
          {"socle", c.socle},
          {"layer", c.layer},
          {"group", c.group},
          {"z", c.z},
          {"outer", c.outer},
          {"d", c.d},
          {"r", opt(c.r)},
          {"R", opt(c.R)},
          {"status", to_string(c.status)},
          {"technique", c.technique ? json(to_string(*c.technique)) : json(nullptr)},
          {"reason", opt(c.reason)},
          {"layer_order", c.layer_order},
          {"fixtures", fx},
          {"z_run", c.z_run},
          {"class_source", opt(c.class_source)},
          {"note", c.note}};
}

CaseRecord case_from_json(const json& j, std::size_t index) {
  const std::string where = "cases[" + std::to_string(index) + "]";
  if (!j.is_object()) schema_error(where, "expected an object");
  CaseRecord c;
  c.id = field<std::string>(j, "id", where);
  c.source = field<std::string>(j, "source", where);
  c.socle = field<std::string>(j, "socle", where);
  c.layer = field<std::string>(j, "layer", where);
  c.group = opt_field<std::string>(j, "group", where).value_or(c.layer);
  c.z = opt_field<std::string>(j, "z", where).value_or("any");
  c.outer = opt_field<bool>(j, "outer", where).value_or(false);
  c.d = field<unsigned>(j, "d", where);
  c.r = opt_field<std::uint64_t>(j, "r", where);
  c.R = opt_field<std::uint64_t>(j, "R", where);
  c.status = status_from(field<std::string>(j, "status", where), where);
  if (auto t = opt_field<std::string>(j, "technique", where)) {
    c.technique = parse_technique(*t);
    if (!c.technique) schema_error(where + ".technique", "unknown technique '" + *t + "'");
  }
  c.reason = opt_field<std::string>(j, "reason", where);
  c.layer_order = field<std::string>(j, "layer_order", where);
  if (j.contains("fixtures")) {
    const json& fx = j["fixtures"];
    if (!fx.is_array()) schema_error(where + ".fixtures", "expected an array");
    for (const auto& f : fx) {
      FixtureRef ref;
      ref.path = field<std::string>(f, "path", where + ".fixtures");
      ref.extend = opt_field<unsigned>(f, "extend", where + ".fixtures").value_or(1);
      c.fixtures.push_back(std::move(ref));
    }
  }
  c.z_run = opt_field<std::vector<std::uint64_t>>(j, "z_run", where).value_or(std::vector<std::uint64_t>{});
  c.class_source = opt_field<std::string>(j, "class_source", where);
  c.note = opt_field<std::string>(j, "note", where).value_or("");
  try {
    c.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::Schema, where + ": " + e.what());
  }
  return c;
}

std::vector<CaseRecord> parse_registry(const json& j) {
  if (!j.is_object() || !j.contains("cases") || !j["cases"].is_array()) {
    schema_error("registry", "expected an object with a 'cases' array");
  }
  std::vector<CaseRecord> out;
  const json& arr = j["cases"];
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(case_from_json(arr[i], i));
  std::vector<std::string> ids;
  for (const auto& c : out) ids.push_back(c.id);
  std::sort(ids.begin(), ids.end());
  auto dup = std::adjacent_find(ids.begin(), ids.end());
  if (dup != ids.end()) schema_error("registry", "duplicate case id '" + *dup + "'");
  return out;
}

std::vector<CaseRecord> load_registry(const std::filesystem::path& path) {
  json j = load_json_file(path);
  try {
    return parse_registry(j);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::vector<CaseRecord> load_builtin_registry() {
  return parse_registry(json::parse(builtin_registry_text()));
}

json registry_to_json(const std::vector<CaseRecord>& cases) {
  json arr = json::array();
  for (const auto& c : cases) arr.push_back(case_to_json(c));
  return {{"version", 1}, {"cases", arr}};
}

bool has_trivial_outer(std::string_view socle) {
  static constexpr std::string_view kTrivial[] = {"M11", "M23", "M24", "J1", "J4", "Co1", "Co2",
                                                  "Co3", "Ru", "Ly", "Th", "Fi23", "B", "M"};
  const std::string canon = canonical_sporadic(socle);
  return std::find(std::begin(kTrivial), std::end(kTrivial), canon) != std::end(kTrivial);
}

namespace {

using Clock = std::chrono::steady_clock;

bool decided(const Verdict& v, CaseStatus expected) {
  if (expected == CaseStatus::NoRegularOrbit) return v.b2 != Tri::Unknown;
  return v.star_holds != Tri::Unknown || v.b2 == Tri::False;
}

Verdict run_technique(const std::string& t, const ModuleAction& m, const RunPolicy& p) {
  const BigInt size = vector_count(m);
  if (t == "t3") {
    T3Options o;
    o.seed = p.seed;
    o.orbit.group_cap = p.group_cap;
    o.orbit.vector_cap = p.t3_full_cap;
    o.mode = size <= BigInt(p.t3_full_cap) ? T3Mode::Full : T3Mode::Sample;
    return t3(m, o);
  }
  if (t == "t1") return t1(m);
  if (t == "t2") return t2(m);
  if (t == "t4") {
    if (size > BigInt(p.t4_cap)) {
      Verdict v;
      v.evidence.note = "t4 skipped: |V| above cap";
      return v;
    }
    T4Options o;
    o.seed = p.seed;
    o.vector_cap = p.t4_cap;
    return t4(m, o);
  }
  if (t == "oracle") return oracle(m);
  throw Error(ErrorKind::InvalidArgument, "unknown technique '" + t + "'");
}

std::string lower(const char* s) {
  std::string o(s);
  for (auto& c : o) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return o;
}

Verdict run_one(const CaseRecord& c, const ModuleAction& m, const RunPolicy& p) {
  std::vector<std::string> order;
  if (p.claimed_first && c.technique) order.push_back(lower(to_string(*c.technique)));
  for (const auto& t : p.order) {
    if (std::find(order.begin(), order.end(), t) == order.end()) order.push_back(t);
  }
  Verdict last;
  std::string tried;
  for (const auto& t : order) {
    Verdict v;
    try {
      v = run_technique(t, m, p);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded && e.kind() != ErrorKind::InsufficientExtension &&
          e.kind() != ErrorKind::MissingData) {
        throw;
      }
      v.evidence.note = t + ": " + e.what();
    }
    tried += (tried.empty() ? "" : ",") + t;
    if (decided(v, c.status)) {
      if (!v.evidence.note.empty()) v.evidence.note += "; ";
      v.evidence.note += "tried " + tried;
      return v;
    }
    last = v;
  }
  last.technique = Technique::None;
  last.evidence.note += (last.evidence.note.empty() ? "" : "; ") + std::string("tried ") + tried;
  return last;
}

Tri merge_tri(const std::vector<Tri>& ts) {
  if (ts.empty()) return Tri::Unknown;
  if (std::any_of(ts.begin(), ts.end(), [](Tri t) { return t == Tri::False; })) return Tri::False;
  if (std::all_of(ts.begin(), ts.end(), [](Tri t) { return t == Tri::True; })) return Tri::True;
  return Tri::Unknown;
}

std::string verdict_brief(const Verdict& v) {
  std::ostringstream os;
  os << to_string(v.technique) << " star=" << to_string(v.star_holds) << " b2=" << to_string(v.b2);
  if (v.evidence.regular_count) os << " c=" << *v.evidence.regular_count;
  if (v.evidence.sigma_ratio) os << " 2sigma/|V|=" << *v.evidence.sigma_ratio;
  if (v.evidence.cover_size) os << " |R|=" << *v.evidence.cover_size;
  return os.str();
}

CaseResult run_threshold(const CaseRecord& c, const std::filesystem::path& fixtures) {
  CaseResult res;
  res.record = c;
  res.verdict.case_id = c.id;
  if (!c.class_source) {
    res.outcome = Outcome::NotRunnable;
    res.detail = "no class data";
    return res;
  }
  auto t0 = Clock::now();
  json j = load_json_file(fixtures / *c.class_source);
  std::vector<ClassDatum> classes;
  if (j.value("kind", "") == "class_data") {
    classes = classes_from_json(j).classes;
  } else {
    PermFixture pf = perm_from_json(j);
    GroupSpec g = perm_group_spec(pf, Field::prime(2));
    g.labels.socle = c.socle;
    ClassOptions opts;
    opts.compute_eigen = false;
    classes = prime_order_classes(g, opts);
  }
  ScreeningInput in = screening_input(classes, c.d, 2);
  BigInt R = max_R(in.iP, in.i2, in.alpha, in.alpha2, c.d);
  res.verdict.evidence.r_threshold = R.str();
  res.verdict.evidence.note = "iP=" + in.iP.str() + " i2=" + in.i2.str() + " alpha=" +
                              std::to_string(in.alpha) + " alpha2=" + std::to_string(in.alpha2);
  res.verdict.runtime_s = std::chrono::duration<double>(Clock::now() - t0).count();
  const BigInt claimed = *c.R;
  const bool exact = has_trivial_outer(c.socle);
  if (exact) {
    res.outcome = R == claimed ? Outcome::Match : Outcome::Mismatch;
    res.detail = "R=" + R.str() + (R == claimed ? " equals " : " differs from ") + claimed.str();
  } else {
    res.outcome = R <= claimed ? Outcome::Match : Outcome::Mismatch;
    res.detail = "R(S)=" + R.str() + (R <= claimed ? " <= " : " > ") + claimed.str() + " (over extensions)";
  }
  return res;
}

}  // namespace

CaseResult run_case(const CaseRecord& c, const std::filesystem::path& fixtures,
                    const RunPolicy& policy) {
  auto t0 = Clock::now();
  CaseResult res;
  res.record = c;
  res.verdict.case_id = c.id;
  if (c.status == CaseStatus::Open) {
    res.outcome = Outcome::Skipped;
    res.detail = "open case";
    return res;
  }
  if (c.R) return run_threshold(c, fixtures);

  const BigInt size = big_pow(BigInt(*c.r), c.d);
  const BigInt min_order(c.layer_order);
  res.verdict.evidence.total_vectors = size.str();
  if (min_order > size) {
    res.verdict.b2 = Tri::False;
    res.verdict.evidence.group_order = ">= " + min_order.str();
    res.verdict.evidence.note = "|G| > |V|";
  } else if (c.fixtures.empty() || c.z_run.empty()) {
    res.outcome = Outcome::NotRunnable;
    res.detail = "no fixture";
    return res;
  } else {
    std::vector<Tri> stars, b2s;
    std::vector<Technique> techs;
    std::string notes;
    for (const auto& f : c.fixtures) {
      ModuleAction base = scalar_extend(load_module(fixtures / f.path), f.extend);
      if (base.field().order() != *c.r || base.dim() != c.d) {
        throw Error(ErrorKind::InvalidArgument,
                    c.id + ": fixture " + f.path + " gives " + base.field().name() + "^" +
                        std::to_string(base.dim()));
      }
      for (auto z : c.z_run) {
        GroupSpec g = adjoin_scalars(base.as_group(), z);
        g.labels.socle = c.socle;
        Verdict v = run_one(c, natural_module(g), policy);
        stars.push_back(v.star_holds);
        b2s.push_back(v.b2);
        techs.push_back(v.technique);
        notes += (notes.empty() ? "" : "; ") + f.path + " z=" + std::to_string(z) + ": " + verdict_brief(v);
        if (res.verdict.evidence.group_order.empty()) res.verdict.evidence = v.evidence;
      }
    }
    res.verdict.star_holds = merge_tri(stars);
    res.verdict.b2 = std::all_of(b2s.begin(), b2s.end(), [](Tri t) { return t == Tri::False; })
                         ? Tri::False
                         : merge_tri(b2s);
    if (res.verdict.conclusive()) {
      res.verdict.technique = techs.front();
      for (auto t : techs) {
        if (t != techs.front()) res.verdict.technique = Technique::None;
      }
    }
    res.verdict.evidence.note = notes;
  }
  res.verdict.runtime_s = std::chrono::duration<double>(Clock::now() - t0).count();
  bool ok = false;
  if (c.status == CaseStatus::NoRegularOrbit) ok = res.verdict.b2 == Tri::False;
  if (c.status == CaseStatus::StarEstablished) ok = res.verdict.star_holds == Tri::True;
  res.outcome = ok ? Outcome::Match : Outcome::Mismatch;
  res.detail = std::string("expected ") + to_string(c.status);
  if (c.technique) {
    res.detail += std::string(", claimed ") + to_string(*c.technique) + ", used " +
                  to_string(res.verdict.technique);
  }
  return res;
}

std::size_t RunReport::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [o](const CaseResult& r) { return r.outcome == o; }));
}

std::vector<const CaseResult*> RunReport::mismatches() const {
  std::vector<const CaseResult*> out;
  for (const auto& r : results) {
    if (r.outcome == Outcome::Mismatch) out.push_back(&r);
  }
  return out;
}

RunReport run_all(const std::vector<CaseRecord>& cases, const std::filesystem::path& fixtures,
                  const RunPolicy& policy, unsigned jobs) {
  RunReport rep;
  rep.results.resize(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        rep.results[i] = run_case(cases[i], fixtures, policy);
      } catch (const std::exception& e) {
        CaseResult r;
        r.record = cases[i];
        r.verdict.case_id = cases[i].id;
        r.outcome = Outcome::NotRunnable;
        r.detail = std::string("error: ") + e.what();
        rep.results[i] = std::move(r);
      }
    }
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rep;
}

std::string report_text(const RunReport& r) {
  std::ostringstream os;
  for (const auto& x : r.results) {
    os << to_string(x.outcome) << "  " << x.record.id << "  [" << to_string(x.record.status) << "]  "
       << x.detail;
    if (x.outcome == Outcome::Match || x.outcome == Outcome::Mismatch) {
      os << "  -> " << verdict_brief(x.verdict);
      if (x.verdict.evidence.r_threshold) os << " R=" << *x.verdict.evidence.r_threshold;
    }
    os << "\n";
  }
  os << "\ntotal " << r.results.size() << ": " << r.count(Outcome::Match) << " match, "
     << r.count(Outcome::Mismatch) << " mismatch, " << r.count(Outcome::Skipped) << " skipped, "
     << r.count(Outcome::NotRunnable) << " not runnable\n";
  auto mm = r.mismatches();
  if (!mm.empty()) {
    os << "\nmismatches:\n";
    for (const auto* x : mm) {
      os << "  " << x->record.id << ": " << x->detail << "; " << x->verdict.evidence.note << "\n";
    }
  }
  return os.str();
}

json report_json(const RunReport& r) {
  json arr = json::array();
  for (const auto& x : r.results) {
    arr.push_back({{"case", case_to_json(x.record)},
                   {"verdict", verdict_to_json(x.verdict)},
                   {"outcome", to_string(x.outcome)},
                   {"detail", x.detail}});
  }
  json mm = json::array();
  for (const auto* x : r.mismatches()) mm.push_back(x->record.id);
  return {{"results", arr},
          {"totals",
           {{"match", r.count(Outcome::Match)},
            {"mismatch", r.count(Outcome::Mismatch)},
            {"skipped", r.count(Outcome::Skipped)},
            {"not_runnable", r.count(Outcome::NotRunnable)}}},
          {"mismatches", mm}};
}

}  // namespace saxl
