#include "globop/tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "globop/pasting.hpp"

namespace globop {

Tree Tree::linear(int height) {
  Tree t;
  for (int i = 0; i < height; ++i) t = Tree(std::vector<Tree>{t});
  return t;
}

Tree Tree::parse(std::string_view text) {
  size_t pos = 0;
  // node := '(' node* ')'
  auto parse_node = [&](auto&& self) -> Tree {
    if (pos >= text.size() || text[pos] != '(')
      throw std::invalid_argument("tree parse: expected '(' at " + std::to_string(pos));
    ++pos;
    std::vector<Tree> kids;
    while (pos < text.size() && text[pos] == '(') kids.push_back(self(self));
    if (pos >= text.size() || text[pos] != ')')
      throw std::invalid_argument("tree parse: expected ')' at " + std::to_string(pos));
    ++pos;
    return Tree(std::move(kids));
  };
  Tree t = parse_node(parse_node);
  if (pos != text.size())
    throw std::invalid_argument("tree parse: trailing input");
  return t;
}

int Tree::height() const {
  int h = 0;
  for (const auto& k : kids_) h = std::max(h, 1 + k.height());
  return h;
}

int Tree::node_count() const {
  int n = 1;
  for (const auto& k : kids_) n += k.node_count();
  return n;
}

std::string Tree::encode() const {
  std::string out = "(";
  for (const auto& k : kids_) out += k.encode();
  out += ")";
  return out;
}

const Tree& Tree::at(const Addr& a) const {
  const Tree* cur = this;
  for (int i : a) {
    if (i < 0 || i >= static_cast<int>(cur->kids_.size()))
      throw std::out_of_range("tree address out of range");
    cur = &cur->kids_[i];
  }
  return *cur;
}

Tree Tree::truncate(int k) const {
  if (k <= 0) return Tree();
  std::vector<Tree> kids;
  kids.reserve(kids_.size());
  for (const auto& c : kids_) kids.push_back(c.truncate(k - 1));
  return Tree(std::move(kids));
}

std::string Sector::to_string() const {
  std::ostringstream out;
  out << "n";
  for (size_t i = 0; i < node.size(); ++i) {
    if (i) out << ".";
    out << node[i];
  }
  out << ":" << gap;
  return out.str();
}

std::vector<Sector> sectors_of(const Tree& t) {
  std::vector<Sector> out;
  auto walk = [&](auto&& self, const Tree& node, Tree::Addr addr) -> void {
    for (int g = 0; g <= static_cast<int>(node.kids().size()); ++g)
      out.push_back({addr, g});
    for (int i = 0; i < static_cast<int>(node.kids().size()); ++i) {
      addr.push_back(i);
      self(self, node.kids()[i], addr);
      addr.pop_back();
    }
  };
  walk(walk, t, {});
  std::sort(out.begin(), out.end());
  return out;
}

Sector src_sector(const Sector& s) {
  if (s.node.empty()) throw std::invalid_argument("0-sector has no source");
  Tree::Addr parent(s.node.begin(), s.node.end() - 1);
  return {std::move(parent), s.node.back()};
}

Sector tgt_sector(const Sector& s) {
  if (s.node.empty()) throw std::invalid_argument("0-sector has no target");
  Tree::Addr parent(s.node.begin(), s.node.end() - 1);
  return {std::move(parent), s.node.back() + 1};
}

namespace detail {
std::string shape_label_str(int c) { return std::to_string(c); }
std::string shape_label_str(const std::string& s) { return s; }
}  // namespace detail

GlobularSet realize(const Tree& tree, int dim) {
  if (tree.height() > dim)
    throw PastingError("realize: tree height exceeds dimension");
  GlobularSet g(dim);
  for (const auto& s : sectors_of(tree)) {
    if (s.level() == 0)
      g.add_cell(0, s.to_string());
    else
      g.add_cell(s.level(), s.to_string(), src_sector(s).to_string(),
                 tgt_sector(s).to_string());
  }
  return g;
}

Report validate_diagram(const Diagram<std::string>& d, const GlobularSet& g) {
  Report r;
  if (d.tree.height() > d.dim) {
    r.add(d.dim, "-", "tree height exceeds diagram dimension");
    return r;
  }
  for (const auto& s : sectors_of(d.tree)) {
    auto it = d.labels.find(s);
    if (it == d.labels.end()) {
      r.add(s.level(), s.to_string(), "unlabelled sector");
      continue;
    }
    const std::string& cell = it->second;
    if (!g.has_cell(s.level(), cell)) {
      r.add(s.level(), s.to_string(), "label " + cell + " missing at this dimension");
      continue;
    }
    if (s.level() >= 1) {
      if (d.at(src_sector(s)) != g.src(s.level(), cell))
        r.add(s.level(), s.to_string(), "label does not commute with src");
      if (d.at(tgt_sector(s)) != g.tgt(s.level(), cell))
        r.add(s.level(), s.to_string(), "label does not commute with tgt");
    }
  }
  return r;
}

Diagram<std::string> cell_globe(const GlobularSet& g, int cell_dim,
                                const std::string& cell, int to_dim) {
  return globe<std::string>(
      cell, cell_dim, to_dim,
      [&](const std::string& c, int d) { return g.src(d, c); },
      [&](const std::string& c, int d) { return g.tgt(d, c); });
}

}  // namespace globop
