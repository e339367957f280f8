#include "ckhopf/trees.hpp"

#include <algorithm>
#include <map>

namespace ckhopf {

namespace {

std::string brace_group(std::span<const std::string> names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ',';
    out += names[i];
  }
  out += '}';
  return out;
}

const std::shared_ptr<const TreeNode>& single_node() {
  static const std::shared_ptr<const TreeNode> node = [] {
    auto n = std::make_shared<TreeNode>();
    n->encoding = "[]";
    return n;
  }();
  return node;
}

}  // namespace

Tree::Tree() : node_(single_node()) {}

const std::string& Tree::encoding() const { return node_->encoding; }
std::size_t Tree::node_count() const { return node_->node_count; }
std::size_t Tree::decoration_weight() const { return node_->decoration_weight; }
std::span<const Tree> Tree::children() const { return node_->children; }
std::span<const std::string> Tree::decoration() const { return node_->decoration; }

bool Tree::is_ladder() const {
  const TreeNode* n = node_.get();
  while (true) {
    if (!n->decoration.empty() || n->children.size() > 1) return false;
    if (n->children.empty()) return true;
    n = n->children.front().node_.get();
  }
}

Forest::Forest(std::vector<Tree> trees, std::vector<std::string> loose_generators)
    : trees_(std::move(trees)), loose_(std::move(loose_generators)) {
  std::sort(trees_.begin(), trees_.end());
  std::sort(loose_.begin(), loose_.end());
  if (is_empty()) return;
  encoding_.clear();
  if (!loose_.empty()) encoding_ = brace_group(loose_);
  for (const auto& t : trees_) {
    encoding_ += t.encoding();
    degree_ += t.node_count();
    weight_ += t.node_count() + t.decoration_weight();
  }
  weight_ += loose_.size();
}

bool Forest::is_decorated() const {
  return !loose_.empty() ||
         std::any_of(trees_.begin(), trees_.end(), [](const Tree& t) { return t.decoration_weight() > 0; });
}

Tree make_tree(const Forest& children) {
  auto node = std::make_shared<TreeNode>();
  node->children.assign(children.trees().begin(), children.trees().end());
  node->decoration.assign(children.loose_generators().begin(), children.loose_generators().end());
  node->encoding = "[";
  if (!node->decoration.empty()) node->encoding += brace_group(node->decoration);
  node->decoration_weight = node->decoration.size();
  for (const auto& c : node->children) {
    node->encoding += c.encoding();
    node->node_count += c.node_count();
    node->decoration_weight += c.decoration_weight();
  }
  node->encoding += ']';
  return Tree(std::move(node));
}

Forest root_branches(const Tree& t) {
  return Forest(std::vector<Tree>(t.children().begin(), t.children().end()),
                std::vector<std::string>(t.decoration().begin(), t.decoration().end()));
}

Forest forest_mul(const Forest& a, const Forest& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  std::vector<Tree> trees(a.trees().begin(), a.trees().end());
  trees.insert(trees.end(), b.trees().begin(), b.trees().end());
  std::vector<std::string> gens(a.loose_generators().begin(), a.loose_generators().end());
  gens.insert(gens.end(), b.loose_generators().begin(), b.loose_generators().end());
  return Forest(std::move(trees), std::move(gens));
}

const std::string& encode_tree(const Tree& t) { return t.encoding(); }

bool is_valid_generator_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(name[0])) return false;
  return std::all_of(name.begin(), name.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

namespace {

class BracketParser {
 public:
  explicit BracketParser(std::string_view text) : text_(text) {}

  Tree tree() {
    expect('[');
    std::vector<std::string> decoration;
    if (peek() == '{') decoration = brace();
    std::vector<Tree> children;
    while (peek() == '[') children.push_back(tree());
    expect(']');
    return make_tree(Forest(std::move(children), std::move(decoration)));
  }

  Forest forest() {
    if (text_ == "1") {
      pos_ = 1;
      return Forest();
    }
    std::vector<Tree> trees;
    std::vector<std::string> gens;
    if (at_end()) fail("empty input");
    while (!at_end()) {
      if (peek() == '[') {
        trees.push_back(tree());
      } else if (peek() == '{') {
        auto g = brace();
        gens.insert(gens.end(), g.begin(), g.end());
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
    }
    return Forest(std::move(trees), std::move(gens));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

 private:
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void expect(char c) {
    if (at_end()) fail(std::string("unexpected end of input, expected '") + c + "'");
    if (text_[pos_] != c) fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    ++pos_;
  }

  std::vector<std::string> brace() {
    expect('{');
    std::vector<std::string> names;
    while (true) {
      const std::size_t start = pos_;
      while (!at_end() && text_[pos_] != ',' && text_[pos_] != '}') ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      if (!is_valid_generator_name(name)) throw ParseError(start, "malformed decoration name '" + std::string(name) + "'");
      names.emplace_back(name);
      if (at_end()) fail("unterminated decoration");
      if (text_[pos_++] == '}') break;
    }
    return names;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Tree parse_tree(std::string_view text) {
  BracketParser p(text);
  if (p.at_end()) p.fail("empty input");
  Tree t = p.tree();
  if (!p.at_end()) p.fail("trailing characters after tree");
  return t;
}

Forest parse_forest(std::string_view text) {
  BracketParser p(text);
  return p.forest();
}

namespace {

// Appends every multiset of trees drawn from pool[0..max_index] with total
// node count `remaining`, choosing indices in non-increasing order.
void multisets(const std::vector<Tree>& pool, std::size_t max_index, std::size_t remaining,
               std::vector<Tree>& current, std::vector<Forest>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t i = max_index + 1; i-- > 0;) {
    if (pool[i].node_count() > remaining) continue;
    current.push_back(pool[i]);
    multisets(pool, i, remaining - pool[i].node_count(), current, out);
    current.pop_back();
  }
}

// Trees with up to max_nodes nodes, in generation order.
std::vector<std::vector<Tree>> trees_by_size(std::size_t max_nodes) {
  std::vector<std::vector<Tree>> by_size(max_nodes + 1);
  std::vector<Tree> pool;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    std::vector<Forest> forests;
    std::vector<Tree> current;
    if (n == 1) {
      forests.emplace_back();
    } else {
      multisets(pool, pool.size() - 1, n - 1, current, forests);
    }
    for (const auto& f : forests) by_size[n].push_back(make_tree(f));
    std::sort(by_size[n].begin(), by_size[n].end());
    pool.insert(pool.end(), by_size[n].begin(), by_size[n].end());
  }
  return by_size;
}

}  // namespace

std::vector<Tree> enumerate_trees(std::size_t n) {
  if (n == 0) return {};
  return trees_by_size(n)[n];
}

std::vector<Forest> enumerate_forests(std::size_t degree) {
  std::vector<Forest> out;
  if (degree == 0) {
    out.emplace_back();
    return out;
  }
  auto by_size = trees_by_size(degree);
  std::vector<Tree> pool;
  for (const auto& group : by_size) pool.insert(pool.end(), group.begin(), group.end());
  std::vector<Tree> current;
  multisets(pool, pool.size() - 1, degree, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Forest> forests_up_to(std::size_t max_degree) {
  std::vector<Forest> out;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    auto level = enumerate_forests(d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

struct PartialCut {
  std::vector<Edge> removed;
  std::vector<Tree> pruned;
  Tree trunk;
};

// All admissible cuts of t, including the empty one, with edge paths
// relative to t's root prefixed by `path`.
std::vector<PartialCut> cuts_with_empty(const Tree& t, std::vector<std::size_t>& path) {
  const auto children = t.children();
  // For each child: either the edge above it is removed (the whole subtree
  // falls), or it stays and the child is cut recursively.
  std::vector<std::vector<PartialCut>> options(children.size());
  std::vector<std::vector<bool>> falls(children.size());
  for (std::size_t i = 0; i < children.size(); ++i) {
    PartialCut fall;
    fall.removed.push_back(Edge{path, i});
    fall.pruned.push_back(children[i]);
    options[i].push_back(std::move(fall));
    falls[i].push_back(true);
    path.push_back(i);
    for (auto& c : cuts_with_empty(children[i], path)) {
      options[i].push_back(std::move(c));
      falls[i].push_back(false);
    }
    path.pop_back();
  }

  std::vector<PartialCut> out;
  std::vector<std::size_t> choice(children.size(), 0);
  const std::vector<std::string> decoration(t.decoration().begin(), t.decoration().end());
  while (true) {
    PartialCut combined;
    std::vector<Tree> kept;
    for (std::size_t i = 0; i < children.size(); ++i) {
      const auto& opt = options[i][choice[i]];
      combined.removed.insert(combined.removed.end(), opt.removed.begin(), opt.removed.end());
      combined.pruned.insert(combined.pruned.end(), opt.pruned.begin(), opt.pruned.end());
      if (!falls[i][choice[i]]) kept.push_back(opt.trunk);
    }
    combined.trunk = make_tree(Forest(std::move(kept), decoration));
    out.push_back(std::move(combined));

    std::size_t k = 0;
    while (k < children.size() && ++choice[k] == options[k].size()) choice[k++] = 0;
    if (k == children.size()) break;
  }
  return out;
}

}  // namespace

std::vector<AdmissibleCut> admissible_cuts(const Tree& t) {
  std::vector<std::size_t> path;
  std::vector<AdmissibleCut> out;
  for (auto& c : cuts_with_empty(t, path)) {
    if (c.removed.empty()) continue;
    out.push_back(AdmissibleCut{std::move(c.removed), Forest(std::move(c.pruned)), std::move(c.trunk)});
  }
  return out;
}

}  // namespace ckhopf
