#include <gtest/gtest.h>

#include <fstream>

#include "fixtures_common.hpp"
#include "saxl/error.hpp"
#include "saxl/registry.hpp"

using namespace saxl;

namespace {

const std::vector<CaseRecord>& builtin() {
  static const auto cases = load_builtin_registry();
  return cases;
}

const CaseRecord& find(const std::string& id) {
  for (const auto& c : builtin()) {
    if (c.id == id) return c;
  }
  throw std::runtime_error("no case " + id);
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST(LoadRegistry, TableCounts) {
  std::map<std::string, int> by_source;
  int open = 0;
  for (const auto& c : builtin()) {
    ++by_source[c.source];
    open += c.status == CaseStatus::Open;
  }
  EXPECT_EQ(by_source["1"], 10);
  EXPECT_EQ(open, 10);
  EXPECT_EQ(by_source["4"], 22);
  for (const auto& c : builtin()) {
    if (c.source == "4") {
      EXPECT_EQ(c.status, CaseStatus::NoRegularOrbit) << c.id;
    }
  }
}

TEST(LoadRegistry, FileMatchesBuiltin) {
  EXPECT_EQ(load_registry(std::filesystem::path(SAXL_TEST_DATA) / "registry.json"), builtin());
}

TEST(LoadRegistry, RoundTripIsIdentity) {
  json j = registry_to_json(builtin());
  EXPECT_EQ(parse_registry(j), builtin());
  EXPECT_EQ(registry_to_json(parse_registry(j)), j);
}

TEST(LoadRegistry, EmptyFileIsAnError) {
  auto p = temp_file("saxl_empty_registry.json", "");
  try {
    load_registry(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Schema);
  }
}

TEST(LoadRegistry, SyntaxErrorNamesLine) {
  auto p = temp_file("saxl_bad_registry.json", "{\"cases\": [\n {\"id\": \"x\",\n oops }\n]}");
  try {
    load_registry(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(LoadRegistry, SchemaErrorNamesField) {
  json j = registry_to_json(builtin());
  j["cases"][5].erase("d");
  try {
    parse_registry(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Schema);
    EXPECT_NE(std::string(e.what()).find("cases[5]"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("'d'"), std::string::npos) << e.what();
  }
  j = registry_to_json(builtin());
  j["cases"][0]["status"] = "maybe";
  EXPECT_THROW(parse_registry(j), Error);
  j = registry_to_json(builtin());
  j["cases"][1]["id"] = j["cases"][0]["id"];
  EXPECT_THROW(parse_registry(j), Error);
}

TEST(LoadRegistry, InvariantsHold) {
  for (const auto& c : builtin()) {
    EXPECT_NO_THROW(c.validate());
    if (c.R) {
      EXPECT_GE(*c.R, 1u);
    }
    if (c.status == CaseStatus::NoRegularOrbit && c.source != "4") {
      EXPECT_TRUE(c.reason) << c.id;
    }
  }
}

TEST(RunCase, M11FiveThree) {
  CaseResult r = run_case(find("P-M11-5-3"), testsupport::fixture_dir());
  EXPECT_EQ(r.verdict.b2, Tri::False);
  EXPECT_EQ(r.outcome, Outcome::Match);
}

TEST(RunCase, M11FiveNineByT4) {
  CaseResult r = run_case(find("P-M11-5-9"), testsupport::fixture_dir());
  EXPECT_EQ(r.verdict.star_holds, Tri::True);
  EXPECT_EQ(r.verdict.technique, Technique::T4);
  EXPECT_EQ(r.outcome, Outcome::Match);
}

TEST(RunCase, OpenCaseSkipped) {
  const CaseRecord& c = find("T1-3.Fi22-27-4");
  EXPECT_EQ(c.status, CaseStatus::Open);
  CaseResult r = run_case(c, testsupport::fixture_dir());
  EXPECT_EQ(r.outcome, Outcome::Skipped);
  EXPECT_NE(r.detail.find("open"), std::string::npos);
}

TEST(RunCase, NoFixtureIsNotRunnable) {
  CaseResult r = run_case(find("P-M12-20-3"), testsupport::fixture_dir());
  EXPECT_EQ(r.outcome, Outcome::NotRunnable);
}

TEST(RunCase, ThresholdRowsRecomputeR) {
  CaseResult r = run_case(find("T3-M11-5"), testsupport::fixture_dir());
  EXPECT_EQ(r.outcome, Outcome::Match);
  EXPECT_EQ(*r.verdict.evidence.r_threshold, "63");
  CaseRecord wrong = find("T3-M11-24");
  wrong.R = 3;
  EXPECT_EQ(run_case(wrong, testsupport::fixture_dir()).outcome, Outcome::Mismatch);
}

TEST(RunCase, ZxM11OverF9) {
  CaseResult r = run_case(find("T4-ZxM11-5-9"), testsupport::fixture_dir());
  EXPECT_EQ(r.outcome, Outcome::Match);
  EXPECT_EQ(r.verdict.b2, Tri::False);
}

TEST(Report, InjectedWrongClaimIsFlagged) {
  std::vector<CaseRecord> cases{find("P-M11-5-3"), find("P-M11-5-9")};
  cases[0].status = CaseStatus::StarEstablished;
  cases[0].technique = Technique::T3;
  RunReport r = run_all(cases, testsupport::fixture_dir(), {}, 2);
  ASSERT_EQ(r.results.size(), 2u);
  EXPECT_EQ(r.results[0].record.id, "P-M11-5-3");
  EXPECT_EQ(r.mismatches().size(), 1u);
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_NE(report_text(r).find("mismatches:"), std::string::npos);
  EXPECT_EQ(report_json(r)["mismatches"][0], "P-M11-5-3");
}

TEST(Report, AllMatch) {
  std::vector<CaseRecord> cases{find("P-M11-5-3"), find("T3-M11-9"), find("T1-3.Fi22-27-4")};
  RunReport r = run_all(cases, testsupport::fixture_dir());
  EXPECT_TRUE(r.mismatches().empty());
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Report, EmptyResultSet) {
  RunReport r = run_all({}, testsupport::fixture_dir(), {}, 4);
  EXPECT_TRUE(r.results.empty());
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(report_json(r)["results"].size(), 0u);
}

TEST(Report, OrderIndependentOfJobs) {
  std::vector<CaseRecord> cases;
  for (const auto& c : builtin()) {
    if (c.id.rfind("T3-M1", 0) == 0 || c.id.rfind("T1-", 0) == 0) cases.push_back(c);
  }
  RunReport a = run_all(cases, testsupport::fixture_dir(), {}, 1);
  RunReport b = run_all(cases, testsupport::fixture_dir(), {}, 3);
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    EXPECT_EQ(a.results[i].record.id, b.results[i].record.id);
    EXPECT_EQ(a.results[i].outcome, b.results[i].outcome);
  }
}
