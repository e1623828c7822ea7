#include "qgen/gencheck.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <thread>

#include "qgen/errors.hpp"
#include "qgen/exact_linalg.hpp"
#include "qgen/report_io.hpp"

namespace qgen {
namespace {

WordRecord check_word(const GenerationTask& task, const ColoredWord& w) {
  WordRecord record{.word = w};
  try {
    std::vector<SubspaceBasis> spaces;
    spaces.reserve(task.subgroups.size());
    for (const auto& h : task.subgroups) {
      spaces.push_back(fixed_space(h, w, task.limits));
      record.subgroup_dims.push_back(dim_span(spaces.back()));
    }
    if (spaces.size() == 1) {
      record.intersection = record.subgroup_dims.front();
    } else {
      SubspaceBasis running = spaces.front();
      for (std::size_t i = 1; i + 1 < spaces.size(); ++i) running = intersect(running, spaces[i]);
      record.intersection = dim_intersection(running, spaces.back());
    }
    record.target = dim_span(fixed_space(task.target, w, task.limits));
    record.verdict = record.intersection == record.target ? Verdict::Pass : Verdict::Fail;
    if (record.intersection < record.target) {
      record.note = "intersection smaller than target: subgroup fixed spaces are not supersets";
    }
  } catch (const CapExceeded& e) {
    record.subgroup_dims.clear();
    record.intersection = 0;
    record.target = 0;
    record.verdict = Verdict::Skipped;
    record.note = e.what();
  }
  return record;
}

constexpr std::array<std::pair<SuiteInstance, std::string_view>, 5> kInstanceNames{{
    {SuiteInstance::LowerRank, "lower-rank"},
    {SuiteInstance::UnitaryTorus, "unitary-torus"},
    {SuiteInstance::UnitaryOrthogonalTorus, "unitary-orthogonal-torus"},
    {SuiteInstance::OrthogonalTorus, "orthogonal-torus"},
    {SuiteInstance::NegativeControls, "negative-controls"},
}};

}  // namespace

void GenerationTask::validate() const {
  if (subgroups.empty()) throw PreconditionError("task '" + name + "' has no subgroups");
  target.validate();
  for (const auto& h : subgroups) {
    h.validate();
    if (h.n != target.n) {
      throw PreconditionError("task '" + name + "': subgroup " + h.to_string() + " and target " +
                              target.to_string() + " have different N");
    }
  }
  if (max_len > limits.max_word_length) {
    throw PreconditionError("task '" + name + "': max_len " + std::to_string(max_len) +
                            " above the word cap " + std::to_string(limits.max_word_length));
  }
  if (is_self_dual(target.family) && filter != WordFilter::UncoloredOnly) {
    throw PreconditionError("task '" + name + "': target " + std::string(group_name(target.family)) +
                            " is self-dual and needs uncolored words");
  }
}

std::vector<ColoredWord> GenerationTask::words() const {
  if (max_len == 0) return {ColoredWord{}};
  std::vector<ColoredWord> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    auto batch = words_of_length(len, filter);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "unknown";
}

std::string_view verdict_name(OverallVerdict v) {
  switch (v) {
    case OverallVerdict::Pass: return "pass";
    case OverallVerdict::Fail: return "fail";
    case OverallVerdict::Incomplete: return "incomplete";
  }
  return "unknown";
}

const WordRecord* GenerationReport::find(const ColoredWord& w) const {
  auto it = std::ranges::find(words, w, &WordRecord::word);
  return it == words.end() ? nullptr : &*it;
}

GenerationReport run_generation_check(const GenerationTask& task) {
  task.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto words = task.words();

  GenerationReport report{.task = task};
  report.words.resize(words.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < words.size(); i = next++) report.words[i] = check_word(task, words[i]);
  };
  const unsigned n_workers = std::clamp<unsigned>(task.workers, 1, std::max<std::size_t>(words.size(), 1));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  }

  bool failed = false;
  for (const auto& record : report.words) {
    if (record.verdict == Verdict::Fail) {
      if (!failed) report.counterexample = record.word;
      failed = true;
    }
    if (record.verdict == Verdict::Skipped) ++report.skipped;
  }
  report.overall = failed ? OverallVerdict::Fail
                   : report.skipped ? OverallVerdict::Incomplete
                                    : OverallVerdict::Pass;
  report.config_hash = sha256_hex(canonical_json(report));
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string_view instance_name(SuiteInstance instance) {
  for (const auto& [i, name] : kInstanceNames) {
    if (i == instance) return name;
  }
  return "unknown";
}

SuiteInstance parse_instance(std::string_view name) {
  for (const auto& [i, n] : kInstanceNames) {
    if (n == name) return i;
  }
  throw PreconditionError("unknown suite instance '" + std::string(name) + "'");
}

bool SuiteEntry::as_expected() const {
  return expect_pass ? report.overall == OverallVerdict::Pass : report.overall == OverallVerdict::Fail;
}

bool SuiteResult::all_as_expected() const {
  return std::ranges::all_of(entries, &SuiteEntry::as_expected);
}

std::vector<GenerationTask> paper_suite_tasks(const SuiteOptions& options) {
  std::vector<SuiteInstance> selected;
  const bool explicit_selection = options.only.has_value();
  if (explicit_selection) {
    selected = *options.only;
  } else {
    for (const auto& entry : kInstanceNames) selected.push_back(entry.first);
  }
  auto wants = [&](SuiteInstance i) { return std::ranges::find(selected, i) != selected.end(); };

  if (explicit_selection && wants(SuiteInstance::LowerRank) &&
      std::ranges::none_of(options.n_list, [](int n) { return n >= 3; })) {
    throw PreconditionError("lower-rank generation requires some N >= 3");
  }

  auto make = [&](std::string name, GroupFamily target, std::vector<GroupFamily> subs, int n,
                  std::size_t max_len, WordFilter filter) {
    GenerationTask task{.name = std::move(name),
                        .target = {target, Dimension(n)},
                        .max_len = max_len,
                        .filter = filter,
                        .limits = options.limits,
                        .workers = options.workers};
    for (auto f : subs) task.subgroups.push_back({f, Dimension(n)});
    return task;
  };

  std::vector<GenerationTask> tasks;
  for (int n : options.n_list) {
    const std::string suffix = "-n" + std::to_string(n);
    if (wants(SuiteInstance::LowerRank) && n >= 3) {
      tasks.push_back(make("lower-rank" + suffix, GroupFamily::FreeU,
                           {GroupFamily::ClassicalU, GroupFamily::EmbeddedFreeULower}, n,
                           options.colored_max_len, WordFilter::AllColorings));
    }
    if (wants(SuiteInstance::UnitaryTorus)) {
      tasks.push_back(make("unitary-torus" + suffix, GroupFamily::FreeU,
                           {GroupFamily::ClassicalU, GroupFamily::TorusFreeGroup}, n,
                           options.colored_max_len, WordFilter::AllColorings));
    }
    if (wants(SuiteInstance::UnitaryOrthogonalTorus)) {
      tasks.push_back(make("unitary-orthogonal-torus" + suffix, GroupFamily::FreeU,
                           {GroupFamily::ClassicalO, GroupFamily::TorusFreeGroup}, n,
                           options.colored_max_len, WordFilter::AllColorings));
    }
    if (wants(SuiteInstance::OrthogonalTorus)) {
      tasks.push_back(make("orthogonal-torus" + suffix, GroupFamily::FreeO,
                           {GroupFamily::ClassicalO, GroupFamily::TorusFreeZ2}, n,
                           options.uncolored_max_len, WordFilter::UncoloredOnly));
    }
  }
  if (wants(SuiteInstance::NegativeControls)) {
    tasks.push_back(make("control-classical-only-n2", GroupFamily::FreeU, {GroupFamily::ClassicalU}, 2, 4,
                         WordFilter::AllColorings));
    tasks.push_back(make("control-torus-only-n2", GroupFamily::FreeU, {GroupFamily::TorusFreeGroup}, 2, 4,
                         WordFilter::AllColorings));
  }
  return tasks;
}

SuiteResult run_paper_suite(const SuiteOptions& options) {
  SuiteResult result;
  std::string canonical;
  for (const auto& task : paper_suite_tasks(options)) {
    const bool control = task.name.starts_with("control-");
    result.entries.push_back({run_generation_check(task), !control});
    canonical += canonical_json(result.entries.back().report);
    canonical += '\n';
  }
  result.suite_hash = sha256_hex(canonical);
  return result;
}

}  // namespace qgen
