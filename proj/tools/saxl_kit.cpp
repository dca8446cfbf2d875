#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "saxl/error.hpp"
#include "saxl/fixtures.hpp"
#include "saxl/registry.hpp"

namespace fs = std::filesystem;
using namespace saxl;

namespace {

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    save_json_file(out, j);
  }
}

struct ModuleArgs {
  std::string group;
  std::string module;
  unsigned extend = 1;
  std::uint64_t z = 1;
  std::string socle;

  void add(CLI::App* app) {
    app->add_option("--group", group, "group fixture (matrix or permutation)");
    app->add_option("--module", module, "module fixture; defaults to the group's natural module");
    app->add_option("--extend", extend, "extend scalars to F_{q^e}")->check(CLI::PositiveNumber);
    app->add_option("-z,--z", z, "adjoin scalars of this order")->check(CLI::PositiveNumber);
    app->add_option("--socle", socle, "socle name for alpha lookup");
  }

  ModuleAction load() const {
    if (group.empty() && module.empty()) {
      throw Error(ErrorKind::InvalidArgument, "--group or --module is required");
    }
    ModuleAction m = load_module(module.empty() ? group : module);
    if (!module.empty() && !group.empty()) {
      GroupSpec g = natural_module(load_module(group).as_group()).group;
      if (m.group.labels.socle.empty()) m.group.labels = g.labels;
      if (!m.group.known_order && g.known_order) m.group.known_order = g.known_order;
    }
    m = scalar_extend(m, extend);
    GroupSpec g = adjoin_scalars(m.as_group(), z);
    if (!socle.empty()) g.labels.socle = socle;
    return natural_module(g);
  }
};

std::filesystem::path default_fixtures() {
  if (const char* env = std::getenv("SAXL_FIXTURES")) return env;
  return "fixtures";
}

std::vector<CaseRecord> registry_from(const std::string& path) {
  return path.empty() ? load_builtin_registry() : load_registry(path);
}

Verdict run_technique(const std::string& tech, const ModuleAction& m, std::uint64_t seed,
                      std::optional<std::uint64_t> budget, const std::string& mode) {
  if (tech == "auto") return verify_auto(m, seed);
  if (tech == "t1") return t1(m);
  if (tech == "t2") return t2(m);
  if (tech == "t3") {
    T3Options o;
    o.seed = seed;
    o.mode = mode == "sample" ? T3Mode::Sample : T3Mode::Full;
    if (budget) o.budget = *budget;
    return t3(m, o);
  }
  if (tech == "t4") {
    T4Options o;
    o.seed = seed;
    if (budget) o.budget = *budget;
    return t4(m, o);
  }
  if (tech == "oracle") return oracle(m);
  throw Error(ErrorKind::InvalidArgument, "unknown technique '" + tech + "'");
}

PermFixture load_perm(const std::string& path) { return perm_from_json(load_json_file(path)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"saxl-kit: common neighbours in Saxl graphs of affine groups"};
  app.require_subcommand(1);
  std::string out;

  // orbits
  auto* orb = app.add_subcommand("orbits", "orbit summary of G on V");
  ModuleArgs orb_m;
  orb_m.add(orb);
  std::string orb_mode = "full";
  std::uint64_t orb_target = 1, orb_seed = 1, orb_cap = kDefaultOrbitCap, orb_budget = 100000;
  std::size_t orb_reps = 1000;
  orb->add_option("--mode", orb_mode)->check(CLI::IsMember({"full", "sample"}));
  orb->add_option("--target", orb_target, "regular orbits wanted in sample mode");
  orb->add_option("--seed", orb_seed);
  orb->add_option("--cap", orb_cap, "largest |V| for full enumeration");
  orb->add_option("--budget", orb_budget, "sample trials");
  orb->add_option("--max-reps", orb_reps, "regular representatives to print");
  orb->add_option("-o,--out", out);

  // verify
  auto* ver = app.add_subcommand("verify", "run a technique on a registry case or a fixture");
  ModuleArgs ver_m;
  ver_m.add(ver);
  std::string ver_case, ver_tech = "auto", ver_mode = "full", ver_registry, ver_fixtures;
  std::uint64_t ver_seed = 1;
  std::optional<std::uint64_t> ver_budget;
  ver->add_option("--case", ver_case, "registry case id, or a fixture path");
  ver->add_option("--technique", ver_tech)
      ->check(CLI::IsMember({"t1", "t2", "t3", "t4", "auto", "oracle"}, CLI::ignore_case));
  ver->add_option("--t3-mode", ver_mode)->check(CLI::IsMember({"full", "sample"}));
  ver->add_option("--seed", ver_seed);
  ver->add_option("--budget", ver_budget, "sampling trials for t3 and t4");
  ver->add_option("--registry", ver_registry, "registry file (default: built in)");
  ver->add_option("--fixtures", ver_fixtures, "fixture directory");
  ver->add_option("-o,--out", out);

  // report
  auto* rep = app.add_subcommand("report", "run every registry case and compare with its status");
  std::string rep_registry, rep_fixtures, rep_text;
  unsigned rep_jobs = 1;
  std::vector<std::string> rep_only;
  rep->add_option("--registry", rep_registry, "registry file (default: built in)");
  rep->add_option("--fixtures", rep_fixtures, "fixture directory");
  rep->add_option("--jobs", rep_jobs)->check(CLI::PositiveNumber);
  rep->add_option("--only", rep_only, "case ids or id prefixes");
  rep->add_option("--out", out, "JSON report path");
  rep->add_option("--text", rep_text, "text report path (default: stdout)");

  // screen
  auto* scr = app.add_subcommand("screen", "screening function f and its threshold R");
  std::string scr_iP = "0", scr_i2 = "0", scr_classes, scr_r;
  unsigned scr_alpha = 2, scr_alpha2 = 3, scr_d = 2;
  ModuleArgs scr_m;
  scr->add_option("--iP", scr_iP);
  scr->add_option("--i2", scr_i2);
  scr->add_option("--alpha", scr_alpha);
  scr->add_option("--alpha2", scr_alpha2);
  scr->add_option("-d,--d", scr_d)->required();
  scr->add_option("-r,--r", scr_r, "evaluate f at r as well");
  scr->add_option("--classes", scr_classes, "class data or group fixture supplying iP, i2, alpha");
  scr->add_option("--socle", scr_m.socle);
  scr->add_option("-o,--out", out);

  // classes
  auto* cls = app.add_subcommand("classes", "prime-order classes of G/Z with eigenspace data");
  ModuleArgs cls_m;
  cls_m.add(cls);
  bool cls_no_eigen = false;
  cls->add_flag("--no-eigen", cls_no_eigen);
  cls->add_option("-o,--out", out);

  // derive
  auto* der = app.add_subcommand("derive", "build a module fixture from permutation generators");
  std::string der_perm, der_op = "full";
  std::uint32_t der_p = 2;
  int der_pick = -1;
  unsigned der_attempts = 100;
  std::uint64_t der_seed = 1;
  bool der_exterior = false;
  std::string der_layer, der_display;
  der->add_option("--perm", der_perm, "permutation fixture")->required();
  der->add_option("-p,--p", der_p, "prime field")->required();
  der->add_option("--op", der_op, "full: permutation module, deleted: sum-zero submodule")
      ->check(CLI::IsMember({"full", "deleted"}));
  der->add_option("--pick", der_pick, "split and keep this constituent (largest first)");
  der->add_flag("--exterior", der_exterior, "take the exterior square last");
  der->add_option("--attempts", der_attempts);
  der->add_option("--seed", der_seed);
  der->add_option("--layer", der_layer);
  der->add_option("--display", der_display);
  der->add_option("-o,--out", out);

  // registry
  auto* reg = app.add_subcommand("registry", "print or check a case registry");
  std::string reg_path;
  reg->add_option("--registry", reg_path, "registry file (default: built in)");
  reg->add_option("-o,--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*orb) {
      ModuleAction m = orb_m.load();
      LinearAction act(m);
      if (orb_mode == "full") {
        OrbitOptions o;
        o.vector_cap = orb_cap;
        OrbitSummary s = all_orbits(m, o);
        emit(orbit_summary_to_json(s, act, orb_reps), out);
      } else {
        SampleResult s = regular_sample(m, orb_target, orb_budget, orb_seed);
        json reps = json::array();
        for (auto v : s.reps) reps.push_back(act.decode(v).coords());
        emit({{"mode", "sample"},
              {"group_order", module_group_order(m)},
              {"total_vectors", vector_count(m).str()},
              {"target", orb_target},
              {"trials", s.trials},
              {"reached_target", s.reached_target},
              {"regular_reps", reps}},
             out);
        return s.reached_target ? 0 : 2;
      }
      return 0;
    }

    if (*ver) {
      const std::string tech = [&] {
        std::string t = ver_tech;
        for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return t;
      }();
      std::optional<CaseRecord> rec;
      if (!ver_case.empty() && !fs::exists(ver_case)) {
        for (auto& c : registry_from(ver_registry)) {
          if (c.id == ver_case) rec = c;
        }
        if (!rec) throw Error(ErrorKind::InvalidArgument, "no case or fixture named '" + ver_case + "'");
      }
      if (rec) {
        RunPolicy pol;
        pol.seed = ver_seed;
        if (tech != "auto") {
          pol.order = {tech};
          pol.claimed_first = false;
        }
        CaseResult r = run_case(*rec, ver_fixtures.empty() ? default_fixtures() : fs::path(ver_fixtures), pol);
        json j = verdict_to_json(r.verdict);
        j["outcome"] = to_string(r.outcome);
        j["detail"] = r.detail;
        emit(j, out);
        return r.outcome == Outcome::Mismatch ? 1 : 0;
      }
      if (!ver_case.empty() && ver_m.group.empty()) ver_m.group = ver_case;
      ModuleAction m = ver_m.load();
      Verdict v = run_technique(tech, m, ver_seed, ver_budget, ver_mode);
      v.case_id = ver_case.empty() ? ver_m.group : ver_case;
      emit(verdict_to_json(v), out);
      return 0;
    }

    if (*rep) {
      auto cases = registry_from(rep_registry);
      if (!rep_only.empty()) {
        std::erase_if(cases, [&](const CaseRecord& c) {
          for (const auto& o : rep_only) {
            if (c.id.rfind(o, 0) == 0) return false;
          }
          return true;
        });
      }
      RunReport r = run_all(cases, rep_fixtures.empty() ? default_fixtures() : fs::path(rep_fixtures), {},
                            rep_jobs);
      if (rep_text.empty()) {
        std::cout << report_text(r);
      } else {
        std::ofstream(rep_text) << report_text(r);
      }
      if (!out.empty()) save_json_file(out, report_json(r));
      return r.exit_code();
    }

    if (*scr) {
      ScreeningInput in;
      if (!scr_classes.empty()) {
        json j = load_json_file(scr_classes);
        std::vector<ClassDatum> classes;
        if (j.value("kind", "") == "class_data") {
          classes = classes_from_json(j).classes;
        } else {
          ModuleAction m = load_module(scr_classes);
          GroupSpec g = m.as_group();
          if (!scr_m.socle.empty()) g.labels.socle = scr_m.socle;
          ClassOptions o;
          o.compute_eigen = false;
          classes = prime_order_classes(g, o);
        }
        in = screening_input(classes, scr_d, 2);
      } else {
        in.iP = BigInt(scr_iP);
        in.i2 = BigInt(scr_i2);
        in.alpha = scr_alpha;
        in.alpha2 = scr_alpha2;
        in.d = scr_d;
      }
      json j = {{"iP", in.iP.str()}, {"i2", in.i2.str()}, {"alpha", in.alpha}, {"alpha2", in.alpha2},
                {"d", scr_d}, {"R", max_R(in.iP, in.i2, in.alpha, in.alpha2, scr_d).str()}};
      if (!scr_r.empty()) {
        in.r = BigInt(scr_r);
        in.validate();
        Rational f = screening_f(in);
        j["r"] = scr_r;
        j["f"] = numerator(f).str() + "/" + denominator(f).str();
        j["f_approx"] = static_cast<double>(f);
        j["below_half"] = !screening_passes(in);
      }
      emit(j, out);
      return 0;
    }

    if (*cls) {
      ModuleAction m = cls_m.load();
      ClassOptions o;
      o.compute_eigen = !cls_no_eigen;
      ClassFixture cf{m.group.labels, m.field(), m.dim(), module_classes(m, o)};
      emit(classes_to_json(cf), out);
      return 0;
    }

    if (*der) {
      PermFixture pf = load_perm(der_perm);
      ModuleAction m = perm_module(pf.generators, Field::prime(der_p));
      if (der_op == "deleted") m = deleted_module(m);
      if (der_pick >= 0) {
        SplitResult s = split(m, der_attempts, der_seed);
        std::cerr << "constituents:";
        for (const auto& c : s.constituents) std::cerr << " " << c.dim();
        std::cerr << (s.complete ? "" : " (partial)") << "\n";
        if (static_cast<std::size_t>(der_pick) >= s.constituents.size()) {
          throw Error(ErrorKind::InvalidArgument, "--pick out of range");
        }
        m = s.constituents[static_cast<std::size_t>(der_pick)];
      }
      if (der_exterior) m = exterior_square(natural_module(m.as_group()));
      GroupSpec g = m.as_group();
      g.labels = pf.labels;
      if (!der_layer.empty()) g.labels.layer = der_layer;
      if (!der_display.empty()) g.labels.display = der_display;
      g.known_order = pf.known_order;
      g.validate();
      std::cerr << "dim " << g.d << " over " << g.field.name()
                << (spin_irreducible(natural_module(g)) ? ", spin-irreducible" : ", reducible") << "\n";
      emit(group_to_json(g), out);
      return 0;
    }

    if (*reg) {
      emit(registry_to_json(registry_from(reg_path)), out);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
