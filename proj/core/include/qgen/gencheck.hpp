#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/fixed_spaces.hpp"
#include "qgen/words.hpp"

namespace qgen {

/// Checks dim(∩_i Fix_{H_i}(V^w)) == dim Fix_G(V^w) for every word up to a
/// length. Equality on all words is the comodule-level form of "the H_i
/// topologically generate G"; a finite run certifies only that slice.
///
/// Word set: every word of length 1..max_len (all colorings, or the single
/// uncolored word per length); max_len == 0 checks just the empty word.
struct GenerationTask {
  std::string name;
  GroupSpec target;
  std::vector<GroupSpec> subgroups;
  std::size_t max_len = 4;
  WordFilter filter = WordFilter::AllColorings;
  Limits limits;
  /// Not part of the canonical report.
  unsigned workers = 1;

  /// Throws PreconditionError: no subgroups, mixed N, max_len above the word
  /// cap, a self-dual target without UncoloredOnly, or an invalid group.
  void validate() const;
  std::vector<ColoredWord> words() const;
};

enum class Verdict { Pass, Fail, Skipped };
enum class OverallVerdict { Pass, Fail, Incomplete };

std::string_view verdict_name(Verdict v);
std::string_view verdict_name(OverallVerdict v);

struct WordRecord {
  ColoredWord word;
  std::vector<std::size_t> subgroup_dims;  // empty when skipped
  std::size_t intersection = 0;
  std::size_t target = 0;
  Verdict verdict = Verdict::Pass;
  std::string note;  // skip reason
};

struct GenerationReport {
  GenerationTask task;
  std::vector<WordRecord> words;  // by length, then word order
  OverallVerdict overall = OverallVerdict::Pass;
  /// First failing word, if any.
  std::optional<ColoredWord> counterexample;
  std::size_t skipped = 0;
  /// SHA-256 of the canonical JSON (everything except timing).
  std::string config_hash;
  double elapsed_seconds = 0.0;

  const WordRecord* find(const ColoredWord& w) const;
};

/// Fail dominates; otherwise any skipped word makes the result Incomplete.
GenerationReport run_generation_check(const GenerationTask& task);

enum class SuiteInstance {
  LowerRank,             // U+_N from U_N and U+_{N-1}, N >= 3
  UnitaryTorus,          // U+_N from U_N and the free-group torus
  UnitaryOrthogonalTorus,// U+_N from O_N and the free-group torus
  OrthogonalTorus,       // O+_N from O_N and the Z_2 free-product torus
  NegativeControls,      // U+_2 from U_2 alone / from the torus alone
};

std::string_view instance_name(SuiteInstance instance);
SuiteInstance parse_instance(std::string_view name);

struct SuiteOptions {
  std::vector<int> n_list{2, 3};
  std::size_t colored_max_len = 6;
  std::size_t uncolored_max_len = 8;
  /// Explicit selection; unset runs every instance that applies to each N.
  std::optional<std::vector<SuiteInstance>> only;
  unsigned workers = 1;
  Limits limits;
};

struct SuiteEntry {
  GenerationReport report;
  bool expect_pass = true;
  bool as_expected() const;
};

struct SuiteResult {
  std::vector<SuiteEntry> entries;
  bool all_as_expected() const;
  /// SHA-256 over the canonical JSON of every report.
  std::string suite_hash;
};

/// The theorem instances plus the two negative controls (N = 2, length 4,
/// expected to fail). Throws PreconditionError if LowerRank is explicitly
/// requested without any N >= 3.
std::vector<GenerationTask> paper_suite_tasks(const SuiteOptions& options);
SuiteResult run_paper_suite(const SuiteOptions& options);

}  // namespace qgen
