#include "ckhopf/report.hpp"

#include <sstream>

namespace ckhopf {

std::string CheckReport::to_text(std::size_t max_witnesses) const {
  std::ostringstream out;
  const char* status = ok() ? "PASS" : "FAIL";
  out << '[' << status << "] " << identity << " (degree <= " << degree_cap << ", " << checked << " checks";
  if (expect_failure) out << ", negative control: " << (passed() ? "no witness found" : "failure expected");
  out << ")\n";
  std::size_t shown = 0;
  for (const auto& w : failures) {
    if (shown++ == max_witnesses) {
      out << "    ... " << failures.size() - max_witnesses << " more witnesses\n";
      break;
    }
    out << "    witness: " << w.input;
    if (!w.note.empty()) out << "  [" << w.note << ']';
    out << "\n      lhs: " << w.lhs << "\n      rhs: " << w.rhs << '\n';
  }
  return out.str();
}

}  // namespace ckhopf
