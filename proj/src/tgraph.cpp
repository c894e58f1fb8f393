#include "globop/tgraph.hpp"

#include <algorithm>

namespace globop {

Shape color_globe(int color, int dim) {
  return globe<int>(
      color, dim, dim, [](int c, int) { return c; }, [](int c, int) { return c; });
}

const Shape& TGraph::d(int dim, const std::string& cell) const {
  auto it = arity.at(dim).find(cell);
  if (it == arity.at(dim).end())
    throw std::out_of_range("no arity for " + cell + " at dim " + std::to_string(dim));
  return it->second;
}

int TGraph::c(int dim, const std::string& cell) const {
  auto it = coarity.at(dim).find(cell);
  if (it == coarity.at(dim).end())
    throw std::out_of_range("no coarity for " + cell + " at dim " + std::to_string(dim));
  return it->second;
}

void TGraph::add(int dim, const std::string& name, Shape a, int c) {
  if (dim != 0) throw std::invalid_argument("positive-dimensional cell needs src/tgt");
  carrier.add_cell(0, name);
  arity[0][name] = std::move(a);
  coarity[0][name] = c;
}

void TGraph::add(int dim, const std::string& name, const std::string& src,
                 const std::string& tgt, Shape a, int c) {
  carrier.add_cell(dim, name, src, tgt);
  arity[dim][name] = std::move(a);
  coarity[dim][name] = c;
}

Report validate_tgraph(const TGraph& g) {
  Report r = validate_globular(g.carrier);
  for (int k = 0; k <= g.max_dim(); ++k) {
    for (const auto& x : g.carrier.cells(k)) {
      Shape dx;
      int cx;
      try {
        dx = g.d(k, x);
        cx = g.c(k, x);
      } catch (const std::out_of_range&) {
        r.add(k, x, "d or c not total");
        continue;
      }
      if (dx.dim != k) r.add(k, x, "arity dimension mismatch");
      if (cx < 1 || cx > g.n_colors) r.add(k, x, "coarity color out of range");
      for (const auto& [s, col] : dx.labels)
        if (col < 1 || col > g.n_colors)
          r.add(k, x, "arity color out of range at " + s.to_string());
      if (k >= 1) {
        const std::string& sx = g.carrier.src(k, x);
        const std::string& tx = g.carrier.tgt(k, x);
        if (!(g.d(k - 1, sx) == boundary(dx, Side::source, k - 1)))
          r.add(k, x, "d does not commute with src");
        if (!(g.d(k - 1, tx) == boundary(dx, Side::target, k - 1)))
          r.add(k, x, "d does not commute with tgt");
        if (g.c(k - 1, sx) != cx) r.add(k, x, "c does not commute with src");
        if (g.c(k - 1, tx) != cx) r.add(k, x, "c does not commute with tgt");
      }
    }
  }
  return r;
}

Report validate_pointed(const PointedTGraph& g) {
  Report r = validate_tgraph(g.base);
  if (static_cast<int>(g.point.size()) <= g.base.max_dim()) {
    r.add(0, "-", "pointing not defined at every dimension");
    return r;
  }
  for (int k = 0; k <= g.base.max_dim(); ++k) {
    if (static_cast<int>(g.point[k].size()) != g.base.n_colors) {
      r.add(k, "-", "pointing missing colors");
      continue;
    }
    for (int j = 1; j <= g.base.n_colors; ++j) {
      const std::string& u = g.point[k][j - 1];
      if (!g.base.carrier.has_cell(k, u)) {
        r.add(k, u, "pointing refers to missing cell");
        continue;
      }
      if (!(g.base.d(k, u) == color_globe(j, k)))
        r.add(k, u, "dp != eta at color " + std::to_string(j));
      if (g.base.c(k, u) != j) r.add(k, u, "cp != id at color " + std::to_string(j));
      if (k >= 1) {
        if (g.base.carrier.src(k, u) != g.point[k - 1][j - 1])
          r.add(k, u, "pointing does not commute with src");
        if (g.base.carrier.tgt(k, u) != g.point[k - 1][j - 1])
          r.add(k, u, "pointing does not commute with tgt");
      }
    }
  }
  return r;
}

std::vector<std::pair<std::string, std::string>> parallel_pairs(const TGraph& g, int k) {
  std::vector<std::pair<std::string, std::string>> out;
  const auto& cells = g.carrier.cells(k);
  for (const auto& a : cells) {
    for (const auto& b : cells) {
      if (k >= 1) {
        if (g.carrier.src(k, a) != g.carrier.src(k, b)) continue;
        if (g.carrier.tgt(k, a) != g.carrier.tgt(k, b)) continue;
      }
      if (!(g.d(k, a) == g.d(k, b))) continue;
      if (g.c(k, a) != g.c(k, b)) {
        if (k >= 1)
          throw std::logic_error("parallel pair (" + a + "," + b +
                                 ") with equal boundaries but distinct coarities");
        continue;  // at k = 0 coarity agreement is part of membership
      }
      out.emplace_back(a, b);
    }
  }
  return out;
}

Report validate_contraction(const TGraph& g, const ContractionData& k) {
  Report r;
  for (int lvl = 0; lvl < g.max_dim(); ++lvl) {
    const auto pairs = parallel_pairs(g, lvl);
    const auto& table = lvl < static_cast<int>(k.brackets.size())
                            ? k.brackets[lvl]
                            : std::map<std::pair<std::string, std::string>, std::string>{};
    if (lvl >= 1) {
      for (const auto& pr : pairs)
        if (!table.count(pr))
          r.add(lvl, pr.first + "," + pr.second, "unfilled parallel pair");
    }
    for (const auto& [pr, br] : table) {
      const auto& [a, b] = pr;
      if (!g.carrier.has_cell(lvl + 1, br)) {
        r.add(lvl + 1, br, "bracket cell missing");
        continue;
      }
      if (g.carrier.src(lvl + 1, br) != a)
        r.add(lvl + 1, br, "bracket src is not the first component");
      if (g.carrier.tgt(lvl + 1, br) != b)
        r.add(lvl + 1, br, "bracket tgt is not the second component");
      if (!(g.d(lvl + 1, br) == degenerate(g.d(lvl, a), lvl + 1)))
        r.add(lvl + 1, br, "bracket arity is not the degenerate arity");
      if (g.c(lvl + 1, br) != g.c(lvl, a))
        r.add(lvl + 1, br, "bracket coarity mismatch");
    }
  }
  return r;
}

PointedTGraph unit_tgraph(int n_colors, int max_dim) {
  PointedTGraph out;
  out.base = TGraph(n_colors, max_dim);
  out.point.resize(max_dim + 1);
  for (int k = 0; k <= max_dim; ++k) {
    for (int j = 1; j <= n_colors; ++j) {
      std::string name = std::to_string(j);
      if (k == 0)
        out.base.add(0, name, color_globe(j, 0), j);
      else
        out.base.add(k, name, name, name, color_globe(j, k), j);
      out.point[k].push_back(name);
    }
  }
  return out;
}

CellUniverse universe_of(const GlobularSet& g) {
  CellUniverse u;
  u.max_dim = g.max_dim();
  u.cells = [&g](int dim) { return g.cells(dim); };
  u.src = [&g](int dim, const std::string& c) { return g.src(dim, c); };
  u.tgt = [&g](int dim, const std::string& c) { return g.tgt(dim, c); };
  return u;
}

namespace {

void enumerate_trees(int max_nodes, int max_height, std::vector<Tree>& out);

// All ordered forests with a total node budget; each tree's height bounded.
void enumerate_forests(int budget, int max_height, std::vector<std::vector<Tree>>& out) {
  out.push_back({});
  if (budget <= 0 || max_height < 0) return;
  std::vector<Tree> firsts;
  enumerate_trees(budget, max_height, firsts);
  for (const auto& f : firsts) {
    std::vector<std::vector<Tree>> rests;
    enumerate_forests(budget - f.node_count(), max_height, rests);
    for (auto& r : rests) {
      std::vector<Tree> forest;
      forest.push_back(f);
      forest.insert(forest.end(), r.begin(), r.end());
      out.push_back(std::move(forest));
    }
  }
}

void enumerate_trees(int max_nodes, int max_height, std::vector<Tree>& out) {
  if (max_nodes < 1) return;
  std::vector<std::vector<Tree>> forests;
  enumerate_forests(max_nodes - 1, max_height - 1, forests);
  for (auto& f : forests) out.push_back(Tree(std::move(f)));
}

}  // namespace

std::vector<Diagram<std::string>> enumerate_diagrams(const CellUniverse& u,
                                                     int dim, int max_nodes) {
  std::vector<Diagram<std::string>> out;
  std::vector<Tree> trees;
  enumerate_trees(max_nodes, dim, trees);
  std::sort(trees.begin(), trees.end());
  for (const auto& tree : trees) {
    auto sectors = sectors_of(tree);
    // Leaf sectors are the free choices; everything else is derived from the
    // children and cross-checked.
    std::vector<Sector> leaves;
    for (const auto& s : sectors)
      if (tree.kid_count(s.node) == 0) leaves.push_back(s);

    std::map<Sector, std::string> assign;
    auto derive_and_emit = [&](auto&& self, size_t i) -> void {
      if (i == leaves.size()) {
        Diagram<std::string> d;
        d.dim = dim;
        d.tree = tree;
        d.labels = assign;
        // Derive non-leaf sectors from their children, top level down.
        for (auto it = sectors.rbegin(); it != sectors.rend(); ++it) {
          const Sector& s = *it;
          int kids = tree.kid_count(s.node);
          if (kids == 0) continue;
          Tree::Addr child = s.node;
          child.push_back(s.gap == 0 ? 0 : s.gap - 1);
          Sector cs{child, 0};
          auto found = d.labels.find(cs);
          if (found == d.labels.end()) return;  // child failed earlier
          const std::string& cell = found->second;
          d.labels[s] = s.gap == 0 ? u.src(s.level() + 1, cell)
                                   : u.tgt(s.level() + 1, cell);
        }
        // Cross-check gluing compatibility.
        for (const auto& s : sectors) {
          if (s.level() == 0) continue;
          const std::string& cell = d.labels.at(s);
          if (d.labels.at(src_sector(s)) != u.src(s.level(), cell)) return;
          if (d.labels.at(tgt_sector(s)) != u.tgt(s.level(), cell)) return;
        }
        out.push_back(std::move(d));
        return;
      }
      const Sector& leaf = leaves[i];
      for (const auto& cell : u.cells(leaf.level())) {
        assign[leaf] = cell;
        self(self, i + 1);
      }
      assign.erase(leaf);
    };
    derive_and_emit(derive_and_emit, 0);
  }
  return out;
}

std::string TensorTGraph::encode(const Diagram<std::string>& pi, const std::string& y) {
  return "(" + encode_diagram(pi) + "|" + y + ")";
}

TensorTGraph tensor(const TGraph& a, const TGraph& b, int node_bound) {
  if (a.n_colors != b.n_colors)
    throw std::invalid_argument("tensor: arity graphs differ");
  TensorTGraph out;
  out.graph = TGraph(a.n_colors, a.max_dim());
  CellUniverse ua = universe_of(a.carrier);
  for (int k = 0; k <= a.max_dim(); ++k) {
    auto diagrams = enumerate_diagrams(ua, k, node_bound);
    for (const auto& pi : diagrams) {
      Shape skel = map_pasting(pi, [&](int lvl, const std::string& cell) {
        return a.c(lvl, cell);
      });
      for (const auto& y : b.carrier.cells(k)) {
        if (!(b.d(k, y) == skel)) continue;
        std::string name = TensorTGraph::encode(pi, y);
        auto arities = map_pasting(pi, [&](int lvl, const std::string& cell) {
          return a.d(lvl, cell);
        });
        Shape d_pair = flatten(arities).diagram;
        int c_pair = b.c(k, y);
        if (k == 0) {
          out.graph.add(0, name, d_pair, c_pair);
        } else {
          std::string s = TensorTGraph::encode(boundary(pi, Side::source, k - 1),
                                               b.carrier.src(k, y));
          std::string t = TensorTGraph::encode(boundary(pi, Side::target, k - 1),
                                               b.carrier.tgt(k, y));
          out.graph.add(k, name, s, t, d_pair, c_pair);
        }
        out.pairs[name] = {pi, y};
      }
    }
  }
  return out;
}

TensorTGraph pointed_tensor(const PointedTGraph& a, const PointedTGraph& b,
                            int node_bound, PointedTGraph* pointed_out) {
  TensorTGraph t = tensor(a.base, b.base, node_bound);
  if (pointed_out) {
    pointed_out->base = t.graph;
    pointed_out->point.assign(t.graph.max_dim() + 1, {});
    for (int k = 0; k <= t.graph.max_dim(); ++k) {
      for (int j = 1; j <= t.graph.n_colors; ++j) {
        Diagram<std::string> eta =
            cell_globe(a.base.carrier, k, a.p(j, k), k);
        pointed_out->point[k].push_back(TensorTGraph::encode(eta, b.p(j, k)));
      }
    }
  }
  return t;
}

}  // namespace globop
