#pragma once

// Canonical unordered rooted trees and forests.
//
// A tree is encoded as "[" decoration? children "]" where the children's
// encodings are sorted ascending byte-lexicographically and the optional
// decoration is a brace group "{a,b}" of sorted generator names. Two trees
// are isomorphic iff their encodings are equal. A forest is a multiset of
// trees plus a multiset of loose generator names; its encoding is the brace
// group of loose generators (if any) followed by the sorted tree encodings,
// and the empty forest is written "1".

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ckhopf {

class Forest;
struct TreeNode;

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::invalid_argument("parse error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset),
        detail_(message) {}
  std::size_t offset() const { return offset_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

class Tree {
 public:
  /// The single-node tree "[]".
  Tree();

  const std::string& encoding() const;
  std::size_t node_count() const;
  /// Number of generator names in decorations, summed over all nodes.
  std::size_t decoration_weight() const;
  std::span<const Tree> children() const;
  std::span<const std::string> decoration() const;
  bool is_ladder() const;

  friend bool operator==(const Tree& a, const Tree& b) { return a.encoding() == b.encoding(); }
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    return a.encoding().compare(b.encoding()) <=> 0;
  }

 private:
  friend Tree make_tree(const Forest& children);
  explicit Tree(std::shared_ptr<const TreeNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TreeNode> node_;
};

struct TreeNode {
  std::vector<std::string> decoration;
  std::vector<Tree> children;
  std::string encoding;
  std::size_t node_count = 1;
  std::size_t decoration_weight = 0;
};

class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees, std::vector<std::string> loose_generators = {});
  static Forest of(const Tree& t) { return Forest({t}); }
  static Forest generator(std::string name) { return Forest({}, {std::move(name)}); }

  std::span<const Tree> trees() const { return trees_; }
  std::span<const std::string> loose_generators() const { return loose_; }
  bool is_empty() const { return trees_.empty() && loose_.empty(); }
  /// Total node count of the trees.
  std::size_t degree() const { return degree_; }
  /// Node count plus every generator occurrence (loose or decorating).
  std::size_t weight() const { return weight_; }
  const std::string& encoding() const { return encoding_; }
  bool is_decorated() const;

  friend bool operator==(const Forest& a, const Forest& b) { return a.encoding_ == b.encoding_; }
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
    return a.encoding_.compare(b.encoding_) <=> 0;
  }

 private:
  std::vector<Tree> trees_;
  std::vector<std::string> loose_;
  std::string encoding_ = "1";
  std::size_t degree_ = 0;
  std::size_t weight_ = 0;
};

/// Grafts the forest's trees under a new root; loose generators become the
/// root's decoration.
Tree make_tree(const Forest& children);
/// Inverse of make_tree.
Forest root_branches(const Tree& t);

Forest forest_mul(const Forest& a, const Forest& b);
inline std::size_t forest_degree(const Forest& f) { return f.degree(); }

const std::string& encode_tree(const Tree& t);
Tree parse_tree(std::string_view text);
/// Accepts "1" for the empty forest, otherwise a sequence of trees and
/// brace groups of loose generators in any order.
Forest parse_forest(std::string_view text);

/// Generator names are nonempty runs of [A-Za-z0-9_] starting with a letter
/// or underscore.
bool is_valid_generator_name(std::string_view name);

/// All canonical trees with n nodes, sorted by encoding. Empty for n = 0.
std::vector<Tree> enumerate_trees(std::size_t n);
/// All undecorated forests of the given degree, sorted by encoding.
std::vector<Forest> enumerate_forests(std::size_t degree);
/// All undecorated forests of degree <= max_degree, ordered by degree then
/// encoding.
std::vector<Forest> forests_up_to(std::size_t max_degree);

/// Edge from the node at `parent_path` (child indices from the root, in
/// canonical order) to its child number `child_index`.
struct Edge {
  std::vector<std::size_t> parent_path;
  std::size_t child_index = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct AdmissibleCut {
  std::vector<Edge> removed_edges;
  Forest pruned;  // the fallen subtrees
  Tree trunk;     // the component containing the root
};

/// One entry per nonempty admissible cut: at most one removed edge on every
/// root-to-leaf path.
std::vector<AdmissibleCut> admissible_cuts(const Tree& t);

/// Plain-text rendering of a forest as used throughout the textual formats.
inline const std::string& format_forest(const Forest& f) { return f.encoding(); }

}  // namespace ckhopf
