#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodge/hodge.hpp"

namespace hodge {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportFormat = "hodge-report/1";

enum class ExitCode { Ok = 0, Failure = 1, Hypothesis = 2, Budget = 3, Input = 4 };

struct Pin {
  std::string name;    // only "parametrically_prime"
  std::string value;   // prime | not_prime | unknown
  std::string source;  // paper | user
};
Pin parse_pin(const std::string& text);  // name=value:source

struct JobSpec {
  std::string name;
  std::vector<std::string> vars;
  std::string poly;
  std::optional<std::string> bfunction;
  std::optional<std::vector<Rational>> weights;
  bool locally_pwh = false;
  bool arrangement = false;  // poly is a product of linear forms
  int max_level = -1;
  std::vector<Pin> pins;
  std::size_t budget = 0;  // S-pair reductions per Groebner basis; 0 = unlimited
};

// "key: value" lines; '#' starts a comment line.
JobSpec parse_job(const std::string& text);

struct ReportEntry {
  std::string key;
  std::string value;
  std::string provenance;  // empty for plumbing fields
};

struct ReportDocument {
  std::vector<ReportEntry> entries;
  ExitCode exit_code = ExitCode::Ok;

  const ReportEntry* find(const std::string& key) const;
  // Timing lines are last; omitting them gives a deterministic document.
  std::string text(bool with_timings = true) const;
};

ReportDocument run_job(const JobSpec& job);
ReportDocument parse_report(const std::string& text);

// "(g1, g2, ...)" as printed in reports.
Ideal parse_ideal(const std::string& text, const Ring& ring);
// Top-level factors of a product such as "x*y*(x+y)".
std::vector<std::string> split_factors(const std::string& product);

struct ExpectedMismatch {
  std::string key;
  std::string detail;
};
// Compares each expected entry against the report; ideals by reduced-GB equality. A value of "*"
// checks presence and provenance only.
std::optional<ExpectedMismatch> compare_report(const ReportDocument& expected, const ReportDocument& actual,
                                               const Ring& ring);

struct CorpusEntry {
  std::string name;
  bool pass = false;
  std::string diff;
  double seconds = 0;
};
struct CorpusResult {
  std::vector<CorpusEntry> entries;  // sorted by name
  bool all_pass() const;
  std::string table() const;
};
// Runs every <name>.job in dir against <name>.expected using up to `workers` threads.
CorpusResult run_corpus(const std::string& dir, unsigned workers = 1);

}  // namespace hodge
