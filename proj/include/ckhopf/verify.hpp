#pragma once

// Named verification suites over the whole basis up to a degree cap. Each
// suite is a list of CheckReports plus free-form annotations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ckhopf/report.hpp"

namespace ckhopf {

struct SuiteOptions {
  std::optional<std::size_t> max_degree;  // suite default when unset
  std::uint64_t seed = 1;
  /// Negative-control fixture: replaces lambda by F -> lambda(F) + F^2 (F != 1)
  /// in the cocycle suite.
  bool corrupt_lambda = false;
};

struct SuiteResult {
  std::string suite;
  std::size_t max_degree = 0;
  std::uint64_t seed = 0;
  std::vector<CheckReport> reports;
  std::vector<std::string> annotations;

  bool ok() const;
  std::string to_text() const;
};

/// coassoc, counit, oracle, cocycle, antipode, retraction, twisting, all.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);
std::size_t default_max_degree(const std::string& suite);

/// Runs one suite; "all" runs every suite in order. Throws
/// std::invalid_argument on an unknown name or a zero degree cap.
std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& options);

/// r on the tree lambda(lambda^2(1) lambda(1)), evaluated twice by
/// independent routes (the recursion and the universal map into K).
struct RetractionAudit {
  std::string tree;
  std::string computed;
  std::string recomputed;
  std::string stated;  // reported alongside, never asserted
  bool stable() const { return computed == recomputed; }
  std::vector<std::string> lines() const;
};
RetractionAudit retraction_audit();

}  // namespace ckhopf
