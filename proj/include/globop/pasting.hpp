#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "globop/glob.hpp"
#include "globop/tree.hpp"

namespace globop {

struct PastingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Composability orientation of the gluing x *_p y.
/// diagrammatic: tgt_p(x) must equal src_p(y) (x sits on the source side);
/// applicative:  the written order is reversed, y sits on the source side.
enum class StarOrder { diagrammatic, applicative };

/// A labelled pasting diagram: a cell of T(G) for whatever G the label type
/// stands for. The tree height may be strictly below dim, in which case the
/// cell is a formal degeneracy of its height-dimensional core; labels exist
/// for every sector of the tree, a level-k sector carrying a k-dimensional
/// label.
template <class L>
struct Diagram {
  int dim = 0;
  Tree tree;
  std::map<Sector, L> labels;

  const L& at(const Sector& s) const {
    auto it = labels.find(s);
    if (it == labels.end())
      throw PastingError("missing label at sector " + s.to_string());
    return it->second;
  }

  const L& top() const {
    if (tree.kids().empty() && tree.height() == 0)
      return at(Sector{{}, 0});
    throw PastingError("top() requires a globe-shaped diagram");
  }

  std::strong_ordering operator<=>(const Diagram& o) const {
    if (auto c = dim <=> o.dim; c != 0) return c;
    if (auto c = tree <=> o.tree; c != 0) return c;
    return labels <=> o.labels;
  }
  bool operator==(const Diagram& o) const {
    return dim == o.dim && tree == o.tree && labels == o.labels;
  }
};

/// Arity diagrams over a coproduct of points: labels are color indices.
using Shape = Diagram<int>;

template <class L>
std::string encode_diagram(const Diagram<L>& d);

namespace detail {
std::string shape_label_str(int c);
std::string shape_label_str(const std::string& s);
template <class M>
std::string shape_label_str(const Diagram<M>& d) {
  return encode_diagram(d);
}
template <class L>
std::string shape_label_str(const L& l) {
  return l.encode();
}
}  // namespace detail

template <class L>
std::string encode_diagram(const Diagram<L>& d) {
  std::ostringstream out;
  out << d.dim << ":" << d.tree.encode() << "{";
  bool first = true;
  for (const auto& [s, l] : d.labels) {
    if (!first) out << ",";
    first = false;
    out << detail::shape_label_str(l);
  }
  out << "}";
  return out.str();
}

/// The boundary embedding of truncate(k) into the full tree on the chosen
/// side: level-k sectors land on the leftmost (source) or rightmost (target)
/// gap of their node; lower sectors are fixed.
inline Sector embed_boundary(const Tree& tree, int k, Side side, const Sector& s) {
  if (s.level() < k) return s;
  int kids = tree.kid_count(s.node);
  return {s.node, side == Side::source ? 0 : kids};
}

template <class L>
Diagram<L> boundary(const Diagram<L>& d, Side side, int k) {
  if (k >= d.dim) throw PastingError("boundary dimension must be below dim");
  if (k < 0) throw PastingError("negative boundary dimension");
  if (k >= d.tree.height()) {
    Diagram<L> out = d;
    out.dim = k;
    return out;
  }
  Diagram<L> out;
  out.dim = k;
  out.tree = d.tree.truncate(k);
  for (const auto& s : sectors_of(out.tree))
    out.labels.emplace(s, d.at(embed_boundary(d.tree, k, side, s)));
  return out;
}

template <class L>
Diagram<L> degenerate(const Diagram<L>& d, int to_dim) {
  if (to_dim < d.dim) throw PastingError("degenerate cannot lower dimension");
  Diagram<L> out = d;
  out.dim = to_dim;
  return out;
}

template <class L>
struct GlueResult {
  Diagram<L> diagram;
  std::map<Sector, Sector> from_left, from_right;
};

/// Diagrammatic gluing x *_p y: requires the p-target of x to equal the
/// p-source of y; children of each level-p node are concatenated, left side
/// first.
template <class L>
GlueResult<L> glue_raw(const Diagram<L>& x, const Diagram<L>& y, int p) {
  if (x.dim != y.dim) throw PastingError("glue: dimension mismatch");
  if (p < 0 || p >= x.dim) throw PastingError("glue: p must satisfy 0 <= p < dim");
  Diagram<L> bx = boundary(x, Side::target, p);
  Diagram<L> by = boundary(y, Side::source, p);
  if (!(bx == by))
    throw PastingError("glue: boundary mismatch at p=" + std::to_string(p) +
                       ": " + encode_diagram(bx) + " vs " + encode_diagram(by));

  GlueResult<L> res;
  res.diagram.dim = x.dim;

  // Merge trees: common trunk up to level p, concatenated children at level p.
  std::function<Tree(const Tree&, const Tree&, int)> merge =
      [&](const Tree& a, const Tree& b, int depth) -> Tree {
    if (depth == p) {
      std::vector<Tree> kids = a.kids();
      kids.insert(kids.end(), b.kids().begin(), b.kids().end());
      return Tree(std::move(kids));
    }
    // Below level p the trees coincide (checked via the boundary equality).
    std::vector<Tree> kids;
    for (size_t i = 0; i < a.kids().size(); ++i)
      kids.push_back(merge(a.kids()[i], b.kids()[i], depth + 1));
    return Tree(std::move(kids));
  };
  res.diagram.tree = merge(x.tree, y.tree, 0);

  auto map_sector = [&](const Sector& s, bool right) -> Sector {
    Sector out = s;
    if (s.level() > p) {
      if (right) {
        Tree::Addr trunk(s.node.begin(), s.node.begin() + p);
        out.node[p] += x.tree.at(trunk).kid_count({});
      }
    } else if (s.level() == p && right) {
      out.gap += x.tree.kid_count(s.node);
    }
    return out;
  };
  for (const auto& s : sectors_of(x.tree)) {
    Sector m = map_sector(s, false);
    res.from_left[s] = m;
    res.diagram.labels.emplace(m, x.at(s));
  }
  for (const auto& s : sectors_of(y.tree)) {
    Sector m = map_sector(s, true);
    res.from_right[s] = m;
    res.diagram.labels.emplace(m, y.at(s));
  }
  return res;
}

template <class L>
Diagram<L> glue(const Diagram<L>& x, const Diagram<L>& y, int p) {
  return glue_raw(x, y, p).diagram;
}

/// Oriented gluing: under applicative order the written-first argument sits
/// on the target side.
template <class L>
Diagram<L> star(const Diagram<L>& x, const Diagram<L>& y, int p, StarOrder ord) {
  return ord == StarOrder::diagrammatic ? glue(x, y, p) : glue(y, x, p);
}

/// The globe eta(x) raised to `dim`: linear tree of the label's own
/// dimension, boundary tower supplied by the src/tgt callbacks
/// (L, level) -> L acting one step down.
template <class L, class SrcF, class TgtF>
Diagram<L> globe(const L& top, int top_dim, int dim, SrcF src, TgtF tgt) {
  if (dim < top_dim) throw PastingError("globe: dim below the label dimension");
  Diagram<L> out;
  out.dim = dim;
  out.tree = Tree::linear(top_dim);
  L s = top, t = top;
  out.labels.emplace(Sector{Tree::Addr(top_dim, 0), 0}, top);
  for (int k = top_dim - 1; k >= 0; --k) {
    s = src(s, k + 1);
    t = tgt(t, k + 1);
    out.labels.emplace(Sector{Tree::Addr(k, 0), 0}, s);
    out.labels.emplace(Sector{Tree::Addr(k, 0), 1}, t);
  }
  return out;
}

template <class L, class M, class F>
Diagram<M> map_labels(const Diagram<L>& d, F f) {
  Diagram<M> out;
  out.dim = d.dim;
  out.tree = d.tree;
  for (const auto& [s, l] : d.labels) out.labels.emplace(s, f(s, l));
  return out;
}

/// T(f) for a cellwise map on labels.
template <class L, class F>
auto map_pasting(const Diagram<L>& d, F f) -> Diagram<decltype(f(d.dim, std::declval<const L&>()))> {
  using M = decltype(f(d.dim, std::declval<const L&>()));
  Diagram<M> out;
  out.dim = d.dim;
  out.tree = d.tree;
  for (const auto& [s, l] : d.labels) out.labels.emplace(s, f(s.level(), l));
  return out;
}

template <class L>
struct FlattenResult {
  Diagram<L> diagram;
  /// For every outer sector s, where each sector of the inner diagram
  /// labelling s landed in the flattened tree.
  std::map<Sector, std::map<Sector, Sector>> prov;
};

/// Monad multiplication mu: flattens a diagram of diagrams by evaluating the
/// outer tree as a gluing/degeneracy expression over the inner diagrams.
template <class L>
FlattenResult<L> flatten(const Diagram<Diagram<L>>& outer) {
  for (const auto& [s, l] : outer.labels)
    if (l.dim != s.level())
      throw PastingError("flatten: label dimension does not match sector level");

  // Locate the spine: unary nodes from the root down to the first node with
  // zero or several children.
  Tree::Addr spine;
  while (outer.tree.kid_count(spine) == 1) spine.push_back(0);
  int p = static_cast<int>(spine.size());
  int q = outer.tree.kid_count(spine);

  FlattenResult<L> res;
  if (q == 0) {
    const Diagram<L>& top = outer.at(Sector{spine, 0});
    res.diagram = degenerate(top, outer.dim);
    std::map<Sector, Sector> id;
    for (const auto& u : sectors_of(top.tree)) id[u] = u;
    res.prov[Sector{spine, 0}] = std::move(id);
    for (int i = 0; i < p; ++i) {
      Tree::Addr node(i, 0);
      for (int g = 0; g <= 1; ++g) {
        const Diagram<L>& lab = outer.at(Sector{node, g});
        Diagram<L> want = boundary(res.diagram, g == 0 ? Side::source : Side::target, i);
        if (!(lab == want))
          throw PastingError("flatten: trunk label at level " + std::to_string(i) +
                             (g == 0 ? " (source)" : " (target)") +
                             " is not the boundary of the top label: " +
                             encode_diagram(lab) + " vs " + encode_diagram(want));
        std::map<Sector, Sector> emb;
        for (const auto& u : sectors_of(lab.tree))
          emb[u] = embed_boundary(top.tree, i, g == 0 ? Side::source : Side::target, u);
        res.prov[Sector{node, g}] = std::move(emb);
      }
    }
    return res;
  }

  // Branch case: split into q sub-diagrams along the level-p node and glue
  // the flattened pieces back together at p.
  std::vector<Diagram<L>> flats;
  std::vector<std::map<Sector, std::map<Sector, Sector>>> provs;
  std::vector<std::map<Sector, Sector>> into_outer;  // C_j sector -> outer sector
  for (int j = 0; j < q; ++j) {
    Tree::Addr child = spine;
    child.push_back(j);
    Tree cj_tree = Tree(std::vector<Tree>{outer.tree.at(child)});
    for (int i = 0; i < p; ++i) cj_tree = Tree(std::vector<Tree>{cj_tree});

    std::map<Sector, Sector> to_outer;
    Diagram<Diagram<L>> cj;
    cj.dim = outer.dim;
    cj.tree = cj_tree;
    for (const auto& u : sectors_of(cj_tree)) {
      Sector o = u;
      if (u.level() > p) {
        o.node[p] = j;
      } else if (u.level() == p) {
        o.gap = j + u.gap;
      }
      to_outer[u] = o;
      cj.labels.emplace(u, outer.at(o));
    }
    FlattenResult<L> sub = flatten(cj);
    flats.push_back(std::move(sub.diagram));
    provs.push_back(std::move(sub.prov));
    into_outer.push_back(std::move(to_outer));
  }

  Diagram<L> acc = flats[0];
  std::vector<std::map<Sector, Sector>> into_result(q);
  for (const auto& u : sectors_of(acc.tree)) into_result[0][u] = u;
  for (int j = 1; j < q; ++j) {
    GlueResult<L> g = glue_raw(acc, flats[j], p);
    for (int i = 0; i < j; ++i)
      for (auto& [u, m] : into_result[i]) m = g.from_left.at(m);
    into_result[j] = g.from_right;
    acc = std::move(g.diagram);
  }
  res.diagram = std::move(acc);
  for (int j = 0; j < q; ++j) {
    for (const auto& [u, o] : into_outer[j]) {
      if (res.prov.count(o)) continue;
      std::map<Sector, Sector> composed;
      for (const auto& [inner, mid] : provs[j].at(u))
        composed[inner] = into_result[j].at(mid);
      res.prov[o] = std::move(composed);
    }
  }
  return res;
}

/// The realized pasting scheme of a tree: sectors become named cells.
GlobularSet realize(const Tree& tree, int dim);

/// Diagram over a globular set's cells, with the sector labelled by cell
/// names of matching dimension and the labelling commuting with src/tgt.
Report validate_diagram(const Diagram<std::string>& d, const GlobularSet& g);

Diagram<std::string> cell_globe(const GlobularSet& g, int cell_dim,
                                const std::string& cell, int to_dim);

}  // namespace globop
