#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "qgen/errors.hpp"
#include "qgen/gencheck.hpp"
#include "qgen/report_io.hpp"

using namespace qgen;
using G = GroupFamily;

namespace {

GroupSpec spec(G f, int n) { return GroupSpec{f, Dimension(n)}; }

GenerationTask task(G target, std::vector<G> subgroups, int n, std::size_t max_len,
                    WordFilter filter = WordFilter::AllColorings) {
  GenerationTask t{.name = "t", .target = spec(target, n)};
  for (auto g : subgroups) t.subgroups.push_back(spec(g, n));
  t.max_len = max_len;
  t.filter = filter;
  return t;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, sep);) out.push_back(cell);
  return out;
}

}  // namespace

TEST(GenerationCheck, LowerRankInstance) {
  const auto report = run_generation_check(task(G::FreeU, {G::ClassicalU, G::EmbeddedFreeULower}, 3, 6));
  EXPECT_EQ(report.words.size(), 126u);
  EXPECT_EQ(report.overall, OverallVerdict::Pass);
  EXPECT_FALSE(report.counterexample.has_value());
  for (const auto& r : report.words) EXPECT_EQ(r.verdict, Verdict::Pass) << r.word.to_string();
}

TEST(GenerationCheck, UnitaryTorusInstance) {
  const auto report = run_generation_check(task(G::FreeU, {G::ClassicalU, G::TorusFreeGroup}, 2, 6));
  EXPECT_EQ(report.overall, OverallVerdict::Pass);
}

TEST(GenerationCheck, ClassicalAloneFails) {
  const auto report = run_generation_check(task(G::FreeU, {G::ClassicalU}, 2, 4));
  EXPECT_EQ(report.overall, OverallVerdict::Fail);
  ASSERT_TRUE(report.counterexample.has_value());
  EXPECT_EQ(*report.counterexample, parse_word("uuUU"));
  const auto* r = report.find(parse_word("uuUU"));
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->intersection, 2u);
  EXPECT_EQ(r->target, 1u);
  EXPECT_EQ(r->verdict, Verdict::Fail);
}

TEST(GenerationCheck, TorusAloneFails) {
  const auto report = run_generation_check(task(G::FreeU, {G::TorusFreeGroup}, 2, 4));
  EXPECT_EQ(report.overall, OverallVerdict::Fail);
  const auto* r = report.find(parse_word("uuUU"));
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->intersection, 4u);
  EXPECT_EQ(r->target, 1u);
  EXPECT_EQ(r->verdict, Verdict::Fail);
  // The first failing word comes earlier: two torus-fixed tensors on "uU".
  EXPECT_EQ(*report.counterexample, parse_word("uU"));
}

TEST(GenerationCheck, EmptyWordOnly) {
  const auto report = run_generation_check(task(G::FreeU, {G::ClassicalU}, 2, 0));
  ASSERT_EQ(report.words.size(), 1u);
  EXPECT_TRUE(report.words[0].word.empty());
  EXPECT_EQ(report.words[0].intersection, 1u);
  EXPECT_EQ(report.words[0].target, 1u);
  EXPECT_EQ(report.overall, OverallVerdict::Pass);
}

TEST(GenerationCheck, Validation) {
  EXPECT_THROW(run_generation_check(task(G::FreeU, {}, 2, 2)), PreconditionError);
  auto mixed = task(G::FreeU, {G::ClassicalU}, 2, 2);
  mixed.subgroups.push_back(spec(G::TorusFreeGroup, 3));
  EXPECT_THROW(run_generation_check(mixed), PreconditionError);
  auto long_task = task(G::FreeU, {G::ClassicalU}, 2, 11);
  EXPECT_THROW(run_generation_check(long_task), PreconditionError);
  EXPECT_THROW(run_generation_check(task(G::FreeO, {G::ClassicalO}, 2, 2)), PreconditionError);
  EXPECT_THROW(run_generation_check(task(G::FreeS, {G::ClassicalS}, 2, 2)), PreconditionError);
  EXPECT_NO_THROW(run_generation_check(task(G::FreeO, {G::ClassicalO}, 2, 2, WordFilter::UncoloredOnly)));
  EXPECT_THROW(run_generation_check(task(G::FreeU, {G::EmbeddedFreeULower}, 2, 2)), PreconditionError);
}

TEST(GenerationCheck, SkippedWordsMakeIncomplete) {
  auto t = task(G::FreeU, {G::ClassicalU, G::TorusFreeGroup}, 2, 6);
  t.limits.max_entries = 20;  // torus bases beyond length 4 need 2^5 entries
  const auto report = run_generation_check(t);
  EXPECT_EQ(report.overall, OverallVerdict::Incomplete);
  EXPECT_GT(report.skipped, 0u);
  for (const auto& r : report.words) {
    if (r.word.size() > 4) {
      EXPECT_EQ(r.verdict, Verdict::Skipped);
      EXPECT_FALSE(r.note.empty());
    } else {
      EXPECT_EQ(r.verdict, Verdict::Pass);
    }
  }

  auto failing = task(G::FreeU, {G::ClassicalU}, 2, 6);
  failing.limits.max_entries = 4;  // three-block pairings on length 6 need 8
  const auto mixed = run_generation_check(failing);
  EXPECT_GT(mixed.skipped, 0u);
  EXPECT_EQ(mixed.overall, OverallVerdict::Fail);
}

TEST(GenerationCheck, IntersectionNeverBelowTarget) {
  SuiteOptions options;
  options.colored_max_len = 4;
  options.uncolored_max_len = 6;
  for (const auto& entry : run_paper_suite(options).entries)
    for (const auto& r : entry.report.words) EXPECT_GE(r.intersection, r.target) << entry.report.task.name;
}

TEST(GenerationCheck, DroppingSubgroupNeverShrinksIntersection) {
  SuiteOptions options;
  options.colored_max_len = 4;
  options.uncolored_max_len = 6;
  for (const auto& full : paper_suite_tasks(options)) {
    if (full.subgroups.size() < 2) continue;
    const auto base = run_generation_check(full);
    for (std::size_t drop = 0; drop < full.subgroups.size(); ++drop) {
      auto reduced = full;
      reduced.subgroups.erase(reduced.subgroups.begin() + static_cast<long>(drop));
      const auto smaller = run_generation_check(reduced);
      ASSERT_EQ(smaller.words.size(), base.words.size());
      for (std::size_t i = 0; i < base.words.size(); ++i)
        EXPECT_GE(smaller.words[i].intersection, base.words[i].intersection) << full.name;
    }
  }
}

TEST(GenerationCheck, DeterministicAcrossWorkerCounts) {
  auto serial = task(G::FreeU, {G::ClassicalU, G::EmbeddedFreeULower}, 3, 5);
  auto parallel = serial;
  parallel.workers = 3;
  const auto a = run_generation_check(serial);
  const auto b = run_generation_check(parallel);
  EXPECT_EQ(a.config_hash, b.config_hash);
  EXPECT_EQ(canonical_json(a), canonical_json(b));
  EXPECT_EQ(a.config_hash, sha256_hex(canonical_json(a)));
}

TEST(Suite, TaskSelection) {
  SuiteOptions options;
  const auto names = [&] {
    std::vector<std::string> out;
    for (const auto& t : paper_suite_tasks(options)) out.push_back(t.name);
    return out;
  };
  const auto all = names();
  EXPECT_NE(std::ranges::find(all, "lower-rank-n3"), all.end());
  EXPECT_EQ(std::ranges::find(all, "lower-rank-n2"), all.end());
  EXPECT_NE(std::ranges::find(all, "control-classical-only-n2"), all.end());
  EXPECT_NE(std::ranges::find(all, "control-torus-only-n2"), all.end());

  options.n_list = {2};
  options.only = std::vector<SuiteInstance>{SuiteInstance::LowerRank};
  EXPECT_THROW(paper_suite_tasks(options), PreconditionError);
  for (auto instance : {SuiteInstance::LowerRank, SuiteInstance::UnitaryTorus, SuiteInstance::UnitaryOrthogonalTorus,
                        SuiteInstance::OrthogonalTorus, SuiteInstance::NegativeControls})
    EXPECT_EQ(parse_instance(instance_name(instance)), instance);
}

TEST(Report, JsonFields) {
  auto t = task(G::FreeU, {G::ClassicalU, G::TorusFreeGroup}, 2, 3);
  t.name = "demo";
  const auto report = run_generation_check(t);
  const auto doc = nlohmann::json::parse(report_json(report));
  EXPECT_EQ(doc["task"]["name"], "demo");
  EXPECT_EQ(doc["task"]["target"], "free-u");
  EXPECT_EQ(doc["task"]["N"], 2);
  EXPECT_EQ(doc["task"]["subgroups"].size(), 2u);
  EXPECT_EQ(doc["task"]["max_len"], 3);
  EXPECT_EQ(doc["overall"], "pass");
  EXPECT_EQ(doc["certified_level"], 3);
  EXPECT_TRUE(doc["counterexample"].is_null());
  EXPECT_EQ(doc["words"].size(), report.words.size());
  EXPECT_TRUE(doc.contains("timing"));
  EXPECT_EQ(doc["config_hash"], report.config_hash);
  const auto& first = doc["words"][0];
  for (const char* key : {"word", "dims", "intersection", "target", "verdict"}) EXPECT_TRUE(first.contains(key)) << key;

  const auto canonical = nlohmann::json::parse(canonical_json(report));
  EXPECT_FALSE(canonical.contains("timing"));
  EXPECT_FALSE(canonical.contains("config_hash"));
}

TEST(Report, CsvMatchesJson) {
  const auto report = run_generation_check(task(G::FreeU, {G::ClassicalU, G::TorusFreeGroup}, 2, 4));
  const auto doc = nlohmann::json::parse(report_json(report));
  std::stringstream csv(report_csv(report));
  std::string line;
  std::getline(csv, line);
  const auto header = split(line, ',');
  ASSERT_EQ(header.size(), 6u);
  EXPECT_EQ(header[0], "word");
  std::size_t row = 0;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    ASSERT_LT(row, doc["words"].size());
    const auto& w = doc["words"][row];
    EXPECT_EQ(cells[0], w["word"].get<std::string>());
    EXPECT_EQ(std::stoul(cells[1]), w["dims"][header[1]].get<std::size_t>());
    EXPECT_EQ(std::stoul(cells[2]), w["dims"][header[2]].get<std::size_t>());
    EXPECT_EQ(std::stoul(cells[3]), w["intersection"].get<std::size_t>());
    EXPECT_EQ(std::stoul(cells[4]), w["target"].get<std::size_t>());
    EXPECT_EQ(cells[5], w["verdict"].get<std::string>());
    ++row;
  }
  EXPECT_EQ(row, doc["words"].size());
}
