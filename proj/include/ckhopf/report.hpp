#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ckhopf {

struct Witness {
  std::string input;
  std::string lhs;
  std::string rhs;
  std::string note;
};

/// Outcome of checking one identity on every basis element up to a degree
/// cap. A negative control sets `expect_failure`, in which case the check is
/// satisfied exactly when at least one witness was found.
struct CheckReport {
  std::string identity;
  std::size_t degree_cap = 0;
  std::size_t checked = 0;
  std::vector<Witness> failures;
  bool expect_failure = false;

  bool passed() const { return failures.empty(); }
  bool ok() const { return passed() != expect_failure; }

  /// Records a witness when lhs != rhs; counts the comparison either way.
  template <class Lhs, class Rhs>
  void compare(bool equal, const std::string& input, Lhs&& render_lhs, Rhs&& render_rhs,
               std::string note = {}) {
    ++checked;
    if (!equal) failures.push_back(Witness{input, render_lhs(), render_rhs(), std::move(note)});
  }

  /// Structured text: status line, degree cap, count, then one block per
  /// witness (at most `max_witnesses`).
  std::string to_text(std::size_t max_witnesses = 5) const;
};

}  // namespace ckhopf
