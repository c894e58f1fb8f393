#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace globop {

/// A Batanin tree: finite ordered rooted tree. Wire encoding is balanced
/// parentheses, children left to right; the root contributes the outer pair,
/// so "()" is the single node and the linear tree of height m is m-fold
/// nesting.
class Tree {
 public:
  Tree() = default;
  explicit Tree(std::vector<Tree> kids) : kids_(std::move(kids)) {}

  static Tree leaf() { return Tree(); }
  static Tree linear(int height);
  static Tree parse(std::string_view text);

  const std::vector<Tree>& kids() const { return kids_; }
  int height() const;
  int node_count() const;
  std::string encode() const;

  /// Node addresses are child-index paths from the root.
  using Addr = std::vector<int>;
  const Tree& at(const Addr& a) const;
  int kid_count(const Addr& a) const { return static_cast<int>(at(a).kids_.size()); }

  /// All nodes at or below level k, structure preserved.
  Tree truncate(int k) const;

  std::strong_ordering operator<=>(const Tree& o) const {
    return encode() <=> o.encode();
  }
  bool operator==(const Tree& o) const { return kids_ == o.kids_; }

 private:
  std::vector<Tree> kids_;
};

/// A sector of a tree: a gap between consecutive children of a node
/// (including the outer two gaps). Sectors at level k are exactly the
/// k-cells of the realized pasting scheme.
struct Sector {
  Tree::Addr node;
  int gap = 0;

  int level() const { return static_cast<int>(node.size()); }

  std::strong_ordering operator<=>(const Sector& o) const {
    if (auto c = level() <=> o.level(); c != 0) return c;
    if (auto c = node <=> o.node; c != 0) return c;
    return gap <=> o.gap;
  }
  bool operator==(const Sector& o) const = default;

  std::string to_string() const;
};

/// Sectors in canonical order: by level, then node address, then gap.
std::vector<Sector> sectors_of(const Tree& t);

/// Source/target of a sector at level >= 1 (independent of the gap index).
Sector src_sector(const Sector& s);
Sector tgt_sector(const Sector& s);

}  // namespace globop
