#include "ckhopf/ladder.hpp"

#include <algorithm>

namespace ckhopf {

LadderMonomial::LadderMonomial(std::vector<std::uint32_t> indices) : indices_(std::move(indices)) {
  indices_.erase(std::remove(indices_.begin(), indices_.end(), 0U), indices_.end());  // x_0 = 1
  std::sort(indices_.begin(), indices_.end());
  if (indices_.empty()) return;
  encoding_.clear();
  for (std::size_t i = 0; i < indices_.size();) {
    std::size_t j = i;
    while (j < indices_.size() && indices_[j] == indices_[i]) ++j;
    if (!encoding_.empty()) encoding_ += '*';
    encoding_ += 'x' + std::to_string(indices_[i]);
    if (j - i > 1) encoding_ += '^' + std::to_string(j - i);
    degree_ += static_cast<std::uint64_t>(indices_[i]) * (j - i);
    i = j;
  }
}

LadderMonomial LadderMonomial::x(std::uint32_t n) { return LadderMonomial(std::vector<std::uint32_t>{n}); }

LadderMonomial operator*(const LadderMonomial& a, const LadderMonomial& b) {
  std::vector<std::uint32_t> idx = a.indices_;
  idx.insert(idx.end(), b.indices_.begin(), b.indices_.end());
  return LadderMonomial(std::move(idx));
}

namespace {

void partitions(std::uint32_t remaining, std::uint32_t max_part, std::vector<std::uint32_t>& current,
                std::vector<LadderMonomial>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::uint32_t p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<LadderMonomial> ladder_monomials_up_to(std::uint64_t max_degree) {
  std::vector<LadderMonomial> out;
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    std::vector<std::uint32_t> current;
    partitions(d, d, current, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Tree ladder_tree(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ladder_tree: n must be positive");
  Tree t;
  for (std::size_t i = 1; i < n; ++i) t = make_tree(Forest::of(t));
  return t;
}

Forest ladder_forest(const LadderMonomial& m) {
  std::vector<Tree> trees;
  for (auto n : m.indices()) trees.push_back(ladder_tree(n));
  return Forest(std::move(trees));
}

std::optional<LadderMonomial> ladder_monomial_of(const Forest& f) {
  if (!f.loose_generators().empty()) return std::nullopt;
  std::vector<std::uint32_t> idx;
  for (const auto& t : f.trees()) {
    if (!t.is_ladder()) return std::nullopt;
    idx.push_back(static_cast<std::uint32_t>(t.node_count()));
  }
  return LadderMonomial(std::move(idx));
}

WellPointedObject ladder_object(std::uint32_t max_index) {
  WellPointedObject x;
  for (std::uint32_t n = 1; n <= max_index; ++n) x.generators.push_back("x" + std::to_string(n));
  return x;
}

}  // namespace ckhopf
