#include "qgen/report_io.hpp"

#include <array>
#include <cstdio>
#include <map>

#include <openssl/evp.h>

#include <json.hpp>

#include "qgen/errors.hpp"

namespace qgen {
namespace {

using nlohmann::ordered_json;

// Subgroup labels are family names, suffixed when a family repeats.
std::vector<std::string> subgroup_labels(const GenerationTask& task) {
  std::vector<std::string> labels;
  std::map<std::string, int> seen;
  for (const auto& h : task.subgroups) {
    std::string label(group_name(h.family));
    if (int count = ++seen[label]; count > 1) label += "#" + std::to_string(count);
    labels.push_back(std::move(label));
  }
  return labels;
}

ordered_json task_json(const GenerationTask& task) {
  ordered_json subs = ordered_json::array();
  for (const auto& h : task.subgroups) subs.push_back(std::string(group_name(h.family)));
  return {
      {"name", task.name},
      {"target", std::string(group_name(task.target.family))},
      {"N", task.target.n.value()},
      {"subgroups", subs},
      {"max_len", task.max_len},
      {"word_filter", task.filter == WordFilter::AllColorings ? "all-colorings" : "uncolored-only"},
      {"limits", {{"max_word_length", task.limits.max_word_length}, {"max_entries", task.limits.max_entries}}},
  };
}

ordered_json canonical_object(const GenerationReport& report) {
  const auto labels = subgroup_labels(report.task);
  ordered_json words = ordered_json::array();
  ordered_json skipped = ordered_json::array();
  for (const auto& record : report.words) {
    ordered_json dims = ordered_json::object();
    for (std::size_t i = 0; i < record.subgroup_dims.size(); ++i) dims[labels[i]] = record.subgroup_dims[i];
    ordered_json entry = {
        {"word", record.word.to_string()},
        {"dims", dims},
        {"intersection", record.intersection},
        {"target", record.target},
        {"verdict", std::string(verdict_name(record.verdict))},
    };
    if (record.verdict == Verdict::Skipped) {
      skipped.push_back({{"word", record.word.to_string()}, {"reason", record.note}});
    } else if (!record.note.empty()) {
      entry["note"] = record.note;
    }
    words.push_back(std::move(entry));
  }
  ordered_json out = {
      {"task", task_json(report.task)},
      {"words", words},
      {"overall", std::string(verdict_name(report.overall))},
      {"certified_level", nullptr},
      {"counterexample", nullptr},
      {"skipped", skipped},
  };
  if (report.overall == OverallVerdict::Pass) out["certified_level"] = report.task.max_len;
  if (report.counterexample) out["counterexample"] = report.counterexample->to_string();
  return out;
}

ordered_json full_object(const GenerationReport& report) {
  ordered_json out = canonical_object(report);
  out["timing"] = {{"seconds", report.elapsed_seconds}, {"workers", report.task.workers}};
  out["config_hash"] = report.config_hash;
  return out;
}

std::string csv_table(const GenerationReport& report) {
  std::string out = "word";
  for (const auto& label : subgroup_labels(report.task)) out += "," + label;
  out += ",intersection,target,verdict\n";
  for (const auto& record : report.words) {
    out += record.word.to_string();
    for (std::size_t i = 0; i < report.task.subgroups.size(); ++i) {
      out += ",";
      if (i < record.subgroup_dims.size()) out += std::to_string(record.subgroup_dims[i]);
    }
    out += "," + std::to_string(record.intersection) + "," + std::to_string(record.target) + "," +
           std::string(verdict_name(record.verdict)) + "\n";
  }
  return out;
}

}  // namespace

std::string canonical_json(const GenerationReport& report) { return canonical_object(report).dump(); }

std::string report_json(const GenerationReport& report, int indent) { return full_object(report).dump(indent); }

std::string report_csv(const GenerationReport& report) { return csv_table(report); }

std::string suite_json(const SuiteResult& result, int indent) {
  ordered_json entries = ordered_json::array();
  for (const auto& entry : result.entries) {
    entries.push_back({
        {"expect", entry.expect_pass ? "pass" : "fail"},
        {"as_expected", entry.as_expected()},
        {"report", full_object(entry.report)},
    });
  }
  ordered_json out = {
      {"suite", entries},
      {"overall", result.all_as_expected() ? "pass" : "fail"},
      {"suite_hash", result.suite_hash},
  };
  return out.dump(indent);
}

std::string suite_csv(const SuiteResult& result) {
  std::string out;
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    const auto& entry = result.entries[i];
    if (i) out += "\n";
    out += "# " + entry.report.task.name + " expect=" + (entry.expect_pass ? "pass" : "fail") +
           " overall=" + std::string(verdict_name(entry.report.overall)) + "\n";
    out += csv_table(entry.report);
  }
  return out;
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace qgen
