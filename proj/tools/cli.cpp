#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgen/diagrams.hpp"
#include "qgen/errors.hpp"
#include "qgen/exact_linalg.hpp"
#include "qgen/fixed_spaces.hpp"
#include "qgen/gencheck.hpp"
#include "qgen/report_io.hpp"

namespace qgen::cli {
namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string format = "json";
  std::string out_path;
  std::size_t max_word_length = Limits{}.max_word_length;
  std::uint64_t max_entries = Limits{}.max_entries;

  Limits limits() const { return {max_word_length, max_entries}; }
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write output to this file instead of stdout");
  cmd->add_option("--max-word-length", opts.max_word_length, "Word length cap")->capture_default_str();
  cmd->add_option("--max-entries", opts.max_entries, "Memory guard: stored tensor entries per object")
      ->capture_default_str();
}

std::string joined(const std::vector<std::string_view>& names) {
  std::string s;
  for (auto n : names) s += (s.empty() ? "" : ", ") + std::string(n);
  return s;
}

std::string group_list() {
  std::vector<std::string_view> names;
  for (auto g : all_groups()) names.push_back(group_name(g));
  return joined(names);
}

std::string family_list() {
  std::vector<std::string_view> names;
  for (auto f : all_families()) names.push_back(family_name(f));
  return joined(names);
}

ordered_json big_integer(const mpz_class& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

ordered_json rational(const mpq_class& value) {
  if (value.get_den() == 1) return big_integer(value.get_num());
  return value.get_str();
}

std::vector<GroupSpec> parse_groups(const std::vector<std::string>& names, int n) {
  std::vector<GroupSpec> out;
  for (const auto& name : names) out.push_back({parse_group(name), Dimension(n)});
  return out;
}

void emit(const CommonOptions& opts, const std::string& text, std::ostream& out) {
  if (opts.out_path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream file(opts.out_path);
  if (!file) throw Error("cannot open output file '" + opts.out_path + "'");
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact fixed-space computations for classical and free quantum groups", "qgen"};
  app.require_subcommand(1);
  app.footer("Group families: " + group_list() + "\nDiagram families: " + family_list());

  int exit_code = kExitOk;

  // enumerate
  CommonOptions enum_opts;
  std::string enum_family;
  std::string enum_word;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the diagrams of a family on a word");
  enumerate_cmd->add_option("--family", enum_family, "Diagram family: " + family_list())->required();
  enumerate_cmd->add_option("--word", enum_word, "Word over {u, U}")->required();
  add_common(enumerate_cmd, enum_opts);

  // gram
  CommonOptions gram_opts;
  std::string gram_family;
  std::string gram_word;
  int gram_n = 2;
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix N^loops of a diagram family and its rank");
  gram_cmd->add_option("--family", gram_family, "Diagram family: " + family_list())->required();
  gram_cmd->add_option("--word", gram_word, "Word over {u, U}")->required();
  gram_cmd->add_option("--N", gram_n, "Dimension N")->capture_default_str();
  add_common(gram_cmd, gram_opts);

  // fixdim
  CommonOptions fix_opts;
  std::string fix_group;
  std::string fix_word;
  int fix_n = 2;
  bool fix_oracle = false;
  auto* fix_cmd = app.add_subcommand("fixdim", "Dimension of a fixed space Fix_G(V^w)");
  fix_cmd->add_option("--group", fix_group, "Group family: " + group_list())->required();
  fix_cmd->add_option("--word", fix_word, "Word over {u, U}")->required();
  fix_cmd->add_option("--N", fix_n, "Dimension N")->capture_default_str();
  fix_cmd->add_flag("--oracle", fix_oracle, "Also compute the Lie-algebra kernel (classical-u, classical-o, torus-abelian)");
  add_common(fix_cmd, fix_opts);

  // intersect
  CommonOptions int_opts;
  std::vector<std::string> int_groups;
  std::string int_word;
  int int_n = 2;
  auto* int_cmd = app.add_subcommand("intersect", "Dimension of the intersection of several fixed spaces");
  int_cmd->add_option("--groups", int_groups, "Group families (comma separated): " + group_list())
      ->required()
      ->delimiter(',');
  int_cmd->add_option("--word", int_word, "Word over {u, U}")->required();
  int_cmd->add_option("--N", int_n, "Dimension N")->capture_default_str();
  add_common(int_cmd, int_opts);

  // gencheck
  CommonOptions gen_opts;
  std::string gen_target;
  std::vector<std::string> gen_subgroups;
  int gen_n = 2;
  std::size_t gen_max_len = 4;
  bool gen_uncolored = false;
  unsigned gen_workers = 1;
  auto* gen_cmd = app.add_subcommand("gencheck", "Certify generation of a target by subgroups up to a word length");
  gen_cmd->add_option("--target", gen_target, "Target group family: " + group_list())->required();
  gen_cmd->add_option("--subgroups", gen_subgroups, "Subgroup families (comma separated)")
      ->required()
      ->delimiter(',');
  gen_cmd->add_option("--N", gen_n, "Dimension N")->capture_default_str();
  gen_cmd->add_option("--max-len", gen_max_len, "Longest word checked")->capture_default_str();
  gen_cmd->add_flag("--uncolored", gen_uncolored, "Check only uncolored words (required for self-dual targets)");
  gen_cmd->add_option("--workers", gen_workers, "Worker threads")->capture_default_str();
  add_common(gen_cmd, gen_opts);

  // paper-suite
  CommonOptions suite_opts;
  std::vector<int> suite_ns{2, 3};
  std::size_t suite_max_len = 6;
  std::optional<std::size_t> suite_max_len_uncolored;
  std::vector<std::string> suite_only;
  unsigned suite_workers = 1;
  auto* suite_cmd = app.add_subcommand(
      "paper-suite", "Run every generation instance plus the negative controls");
  suite_cmd->add_option("--N", suite_ns, "Dimensions (comma separated)")->delimiter(',')->capture_default_str();
  suite_cmd->add_option("--max-len", suite_max_len, "Longest colored word")->capture_default_str();
  suite_cmd->add_option("--max-len-uncolored", suite_max_len_uncolored,
                        "Longest uncolored word for the orthogonal instance (default: --max-len + 2)");
  suite_cmd->add_option("--only", suite_only,
                        "Instances to run (comma separated): lower-rank, unitary-torus, "
                        "unitary-orthogonal-torus, orthogonal-torus, negative-controls")
      ->delimiter(',');
  suite_cmd->add_option("--workers", suite_workers, "Worker threads per task")->capture_default_str();
  add_common(suite_cmd, suite_opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate_cmd) {
      const auto word = parse_word(enum_word);
      const auto family = parse_family(enum_family);
      const auto diagrams = enumerate(family, word, enum_opts.limits());
      if (enum_opts.format == "json") {
        ordered_json list = ordered_json::array();
        for (const auto& d : diagrams) list.push_back(ordered_json::parse(d.to_string()));
        ordered_json doc = {{"family", enum_family}, {"word", enum_word}, {"count", diagrams.size()},
                            {"diagrams", list}};
        emit(enum_opts, doc.dump(2), out);
      } else {
        std::string csv = "index,diagram\n";
        for (std::size_t i = 0; i < diagrams.size(); ++i) {
          csv += std::to_string(i + 1) + "," + quoted(diagrams[i].to_string()) + "\n";
        }
        emit(enum_opts, csv, out);
      }
    } else if (*gram_cmd) {
      const auto word = parse_word(gram_word);
      const auto diagrams = enumerate(parse_family(gram_family), word, gram_opts.limits());
      const auto g = gram_matrix(diagrams, Dimension(gram_n));
      const auto r = rank(g);
      if (gram_opts.format == "json") {
        ordered_json names = ordered_json::array();
        for (const auto& d : diagrams) names.push_back(ordered_json::parse(d.to_string()));
        ordered_json matrix = ordered_json::array();
        for (std::size_t i = 0; i < g.rows(); ++i) {
          ordered_json row = ordered_json::array();
          for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(rational(g(i, j)));
          matrix.push_back(row);
        }
        ordered_json doc = {{"family", gram_family}, {"word", gram_word}, {"N", gram_n},
                            {"diagrams", names},     {"matrix", matrix},  {"rank", r}};
        emit(gram_opts, doc.dump(2), out);
      } else {
        std::string csv = "row";
        for (std::size_t j = 0; j < g.cols(); ++j) csv += ",c" + std::to_string(j + 1);
        csv += "\n";
        for (std::size_t i = 0; i < g.rows(); ++i) {
          csv += std::to_string(i + 1);
          for (std::size_t j = 0; j < g.cols(); ++j) csv += "," + g(i, j).get_str();
          csv += "\n";
        }
        csv += "rank," + std::to_string(r) + "\n";
        emit(gram_opts, csv, out);
      }
    } else if (*fix_cmd) {
      const auto word = parse_word(fix_word);
      const GroupSpec spec{parse_group(fix_group), Dimension(fix_n)};
      const auto space = fixed_space(spec, word, fix_opts.limits());
      const auto dim = dim_span(space);
      std::optional<std::size_t> oracle;
      if (fix_oracle) oracle = dim_span(lie_kernel_oracle(spec, word, fix_opts.limits()));
      if (fix_opts.format == "json") {
        ordered_json doc = {{"group", fix_group}, {"N", fix_n}, {"word", fix_word},
                            {"vectors", space.size()}, {"dim", dim}};
        if (oracle) doc["oracle_dim"] = *oracle;
        emit(fix_opts, doc.dump(2), out);
      } else {
        std::string csv = "group,N,word,vectors,dim" + std::string(oracle ? ",oracle_dim" : "") + "\n";
        csv += fix_group + "," + std::to_string(fix_n) + "," + fix_word + "," + std::to_string(space.size()) +
               "," + std::to_string(dim) + (oracle ? "," + std::to_string(*oracle) : "") + "\n";
        emit(fix_opts, csv, out);
      }
    } else if (*int_cmd) {
      const auto word = parse_word(int_word);
      const auto specs = parse_groups(int_groups, int_n);
      std::vector<SubspaceBasis> spaces;
      for (const auto& s : specs) spaces.push_back(fixed_space(s, word, int_opts.limits()));
      SubspaceBasis running = spaces.front();
      for (std::size_t i = 1; i + 1 < spaces.size(); ++i) running = intersect(running, spaces[i]);
      const std::size_t meet =
          spaces.size() == 1 ? dim_span(spaces.front()) : dim_intersection(running, spaces.back());
      if (int_opts.format == "json") {
        ordered_json groups = ordered_json::array();
        for (std::size_t i = 0; i < specs.size(); ++i) {
          groups.push_back({{"group", int_groups[i]}, {"dim", dim_span(spaces[i])}});
        }
        ordered_json doc = {{"word", int_word}, {"N", int_n}, {"groups", groups}, {"intersection", meet}};
        emit(int_opts, doc.dump(2), out);
      } else {
        std::string csv = "group,dim\n";
        for (std::size_t i = 0; i < specs.size(); ++i) {
          csv += int_groups[i] + "," + std::to_string(dim_span(spaces[i])) + "\n";
        }
        csv += "intersection," + std::to_string(meet) + "\n";
        emit(int_opts, csv, out);
      }
    } else if (*gen_cmd) {
      GenerationTask task{.name = "gencheck",
                          .target = {parse_group(gen_target), Dimension(gen_n)},
                          .subgroups = parse_groups(gen_subgroups, gen_n),
                          .max_len = gen_max_len,
                          .filter = gen_uncolored ? WordFilter::UncoloredOnly : WordFilter::AllColorings,
                          .limits = gen_opts.limits(),
                          .workers = gen_workers};
      const auto report = run_generation_check(task);
      emit(gen_opts, gen_opts.format == "json" ? report_json(report) : report_csv(report), out);
      if (report.overall != OverallVerdict::Pass) {
        err << "generation check " << verdict_name(report.overall);
        if (report.counterexample) err << " at word '" << report.counterexample->to_string() << "'";
        err << "\n";
        exit_code = kExitCheckFailed;
      }
    } else if (*suite_cmd) {
      SuiteOptions options{.n_list = suite_ns,
                           .colored_max_len = suite_max_len,
                           .uncolored_max_len = suite_max_len_uncolored.value_or(suite_max_len + 2),
                           .workers = suite_workers,
                           .limits = suite_opts.limits()};
      if (!suite_only.empty()) {
        std::vector<SuiteInstance> only;
        for (const auto& name : suite_only) only.push_back(parse_instance(name));
        options.only = only;
      }
      const auto result = run_paper_suite(options);
      emit(suite_opts, suite_opts.format == "json" ? suite_json(result) : suite_csv(result), out);
      if (!result.all_as_expected()) {
        for (const auto& entry : result.entries) {
          if (!entry.as_expected()) {
            err << "task " << entry.report.task.name << " expected " << (entry.expect_pass ? "pass" : "fail")
                << " but got " << verdict_name(entry.report.overall) << "\n";
          }
        }
        exit_code = kExitCheckFailed;
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}

}  // namespace qgen::cli
