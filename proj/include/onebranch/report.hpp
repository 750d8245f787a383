#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "onebranch/classify.hpp"
#include "onebranch/n28.hpp"

namespace onebranch {

enum class Severity { Info, Warning, Error };
std::string to_string(Severity s);

struct Discrepancy {
  std::string location;  // anchor in the source lists, e.g. "S2 list, layer I'=S4, F18"
  std::string expected;
  std::string computed;
  Severity severity = Severity::Error;
};

struct Check {
  std::string name;
  std::string anchor;
  std::string expected;
  std::string computed;
  bool ok = false;
};

struct SuiteReport {
  std::string suite;
  std::string field;
  std::size_t precision = 0;
  std::vector<Check> checks;
  std::vector<Discrepancy> discrepancies;
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0;

  bool failed() const;  // any failed check or error-severity discrepancy
  void check(std::string name, std::string anchor, std::string expected, std::string computed, bool ok);
  void discrepancy(std::string location, std::string expected, std::string computed, Severity severity);
  nlohmann::json to_json() const;
  std::string summary() const;
};

/// Suites: end-chain, s3-list, s2-prop, cascade, witness, criterion-table, cases, all.
struct SuiteConfig {
  std::string suite = "all";
  FieldSpec field{3};
  std::size_t precision = 64;
  std::optional<std::string> out;
  std::size_t jobs = 1;

  static const std::vector<std::string>& suite_names();
  /// Throws std::invalid_argument for unknown suites, Q, or too little precision.
  void validate() const;
};

std::vector<SuiteReport> run_suite(const SuiteConfig& cfg);

/// Writes the JSON report to cfg.out (if set) and the summary next to it with extension .txt.
/// Returns 0 if no suite failed, 1 otherwise.
int write_reports(const SuiteConfig& cfg, const std::vector<SuiteReport>& reports);

SuiteReport suite_end_chain(const SuiteConfig& cfg);
SuiteReport suite_s3_list(const SuiteConfig& cfg);
SuiteReport suite_s2_prop(const SuiteConfig& cfg);
SuiteReport suite_cascade(const SuiteConfig& cfg);
SuiteReport suite_witness(const SuiteConfig& cfg);
SuiteReport suite_criterion_table(const SuiteConfig& cfg);
SuiteReport suite_cases(const SuiteConfig& cfg);

/// One exported ideal class.
struct ClassRow {
  std::string layer;
  std::optional<TailSpan<Fp>> induced;
  TailSpan<Fp> representative;
  std::optional<std::string> family;
  std::optional<ParamValues> params;
};

/// Rows of every class of the last cascade level, sorted.
std::vector<ClassRow> class_rows(const CascadeResult& result);

/// Rows of one S2 layer with family labels from the matcher.
std::vector<ClassRow> layer_rows(const std::string& layer, const LayerOutcome& outcome, const MatchReport& match);

/// Deterministic JSON array or CSV (header + one line per row), rows sorted.
std::string export_classes(std::vector<ClassRow> rows, const std::string& format);
std::vector<ClassRow> import_classes(const std::string& json_text);

}  // namespace onebranch
