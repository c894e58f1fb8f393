#include "globop/freeops.hpp"

#include <algorithm>
#include <set>

namespace globop {

std::string bracket_cell_name(const std::string& lo, const std::string& hi) {
  return "[" + lo + "," + hi + "]";
}

FreeContraction free_contraction(const TGraph& p, int fill_from_level) {
  FreeContraction out;
  out.graph = TGraph(p.n_colors, p.max_dim());
  out.brackets = ContractionData(p.max_dim());
  // Dimension 0 is always P(0).
  for (const auto& x : p.carrier.cells(0))
    out.graph.add(0, x, p.d(0, x), p.c(0, x));
  for (int n = 1; n <= p.max_dim(); ++n) {
    for (const auto& x : p.carrier.cells(n))
      out.graph.add(n, x, p.carrier.src(n, x), p.carrier.tgt(n, x), p.d(n, x),
                    p.c(n, x));
    int k = n - 1;
    if (k < fill_from_level) continue;
    for (const auto& [a, b] : parallel_pairs(out.graph, k)) {
      std::string name = bracket_cell_name(a, b);
      out.graph.add(n, name, a, b, degenerate(out.graph.d(k, a), n),
                    out.graph.c(k, a));
      out.brackets.brackets[k][{a, b}] = name;
    }
  }
  return out;
}

bool check_tgraph_morphism(const TGraph& p, const TGraph& q, const CellMap& f,
                           Report* why) {
  bool ok = check_morphism(p.carrier, q.carrier, f, why);
  if (!ok) return false;
  for (int k = 0; k <= p.max_dim(); ++k) {
    for (const auto& x : p.carrier.cells(k)) {
      const std::string& y = f[k].at(x);
      if (!(p.d(k, x) == q.d(k, y))) {
        ok = false;
        if (why) why->add(k, x, "arity not preserved");
      }
      if (p.c(k, x) != q.c(k, y)) {
        ok = false;
        if (why) why->add(k, x, "coarity not preserved");
      }
    }
  }
  return ok;
}

CellMap extend_contraction(const FreeContraction& fp, const TGraph& p,
                           const TGraph& q, const ContractionData& kq,
                           const CellMap& f) {
  CellMap g(fp.graph.max_dim() + 1);
  for (int n = 0; n <= fp.graph.max_dim(); ++n) {
    for (const auto& x : fp.graph.carrier.cells(n)) {
      if (p.carrier.has_cell(n, x)) {
        g[n][x] = f[n].at(x);
        continue;
      }
      // A formal bracket: find its pair in the contraction table.
      bool found = false;
      for (const auto& [pr, name] : fp.brackets.brackets[n - 1]) {
        if (name != x) continue;
        const std::string& ga = g[n - 1].at(pr.first);
        const std::string& gb = g[n - 1].at(pr.second);
        auto it = kq.brackets[n - 1].find({ga, gb});
        if (it == kq.brackets[n - 1].end())
          throw std::runtime_error("target contraction undefined on (" + ga +
                                   "," + gb + ") at level " +
                                   std::to_string(n - 1));
        g[n][x] = it->second;
        found = true;
        break;
      }
      if (!found)
        throw std::logic_error("cell " + x + " is neither in P nor a bracket");
    }
  }
  return g;
}

bool preserves_contraction(const TGraph& g1, const ContractionData& k1,
                           const ContractionData& k2, const CellMap& g) {
  for (size_t lvl = 0; lvl < k1.brackets.size(); ++lvl) {
    for (const auto& [pr, name] : k1.brackets[lvl]) {
      auto it = k2.brackets[lvl].find(
          {g[lvl].at(pr.first), g[lvl].at(pr.second)});
      if (it == k2.brackets[lvl].end()) return false;
      if (g[lvl + 1].at(name) != it->second) return false;
    }
  }
  (void)g1;
  return true;
}

std::vector<Term> fusion_oracle(const Collection& x, int layers,
                                long long max_size, bool level0_brackets) {
  std::set<Term> cells;
  for (int d = 0; d <= x.max_dim(); ++d)
    for (const auto& g : x.gens(d)) cells.insert(make_gen(x, g.name));

  auto pool_by_dim = [&] {
    std::vector<std::vector<Term>> pool(x.max_dim() + 1);
    for (const auto& t : cells) pool[t.dim()].push_back(t);
    return pool;
  };

  for (int layer = 0; layer < layers; ++layer) {
    if (layer % 2 == 0) {
      // Free-monoid layer: close under composition within the size bound.
      bool grew = true;
      while (grew) {
        grew = false;
        auto pool = pool_by_dim();
        std::vector<Term> fresh;
        for (const auto& head : cells) {
          long long budget = max_size - 1 - head.size();
          if (budget < 1) continue;
          for (const auto& args : enumerate_args(head, pool, budget)) {
            Term t;
            try {
              t = compose(head, args);
            } catch (const TermTypeError&) {
              continue;
            }
            if (t.size() <= max_size && !cells.count(t)) fresh.push_back(t);
          }
        }
        for (const auto& t : fresh) grew |= cells.insert(t).second;
      }
    } else {
      // Free-contraction layer: bracket every parallel pair in range.
      std::vector<Term> fresh;
      for (const auto& lo : cells) {
        if (lo.dim() + 1 > x.max_dim()) continue;
        if (lo.dim() == 0 && !level0_brackets) continue;
        for (const auto& hi : cells) {
          if (hi.dim() != lo.dim()) continue;
          if (1 + std::max(lo.size(), hi.size()) > max_size) continue;
          try {
            fresh.push_back(make_bracket(lo, hi));
          } catch (const NotParallel&) {
          }
        }
      }
      for (const auto& t : fresh) cells.insert(t);
    }
  }
  std::vector<Term> out(cells.begin(), cells.end());
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.size() != b.size()) return a.size() < b.size();
    return a.encode() < b.encode();
  });
  return out;
}

namespace {

// Union-find over cell names.
struct UnionFind {
  std::map<std::string, std::string> parent;
  const std::string& find(const std::string& x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return parent.find(x)->second;
    }
    if (it->second == x) return it->second;
    const std::string root = find(it->second);
    parent[x] = root;
    return parent.find(x)->second;
  }
  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;  // keep the lexicographically least representative
  }
};

Diagram<std::string> point_relabel(const Shape& shape, const PointedTGraph& x) {
  return map_labels<int, std::string>(
      shape, [&](const Sector& s, int col) { return x.p(col, s.level()); });
}

}  // namespace

MonoidLayers free_monoid_layer(const PointedTGraph& x, int steps, int node_bound) {
  MonoidLayers out;
  out.x = x;
  int D = x.base.max_dim();

  PointedTGraph unit = unit_tgraph(x.base.n_colors, D);
  out.layer.push_back(unit.base);  // X_0 = I
  out.layer.push_back(x.base);     // X_1 = X
  out.classes.resize(2);

  // l_0 = !_X : I -> X is the pointing.
  CellMap l0(D + 1);
  for (int k = 0; k <= D; ++k)
    for (int j = 1; j <= x.base.n_colors; ++j)
      l0[k][std::to_string(j)] = x.p(j, k);
  out.l.push_back(l0);

  // q_0 = u_r : X (x) I -> X, (eta(c), globe) -> c.
  out.q_domain.push_back(tensor(x.base, unit.base, node_bound));
  CellMap q0(D + 1);
  for (const auto& [name, pr] : out.q_domain[0].pairs) {
    const auto& [pi, y] = pr;
    Sector top{Tree::Addr(pi.tree.height(), 0), 0};
    q0[pi.dim][name] = pi.at(top);
  }
  out.q.push_back(q0);

  for (int n = 0; n + 2 <= steps; ++n) {
    const TGraph& xn1 = out.layer[n + 1];
    TensorTGraph t2 = tensor(x.base, xn1, node_bound);
    const TensorTGraph& t1 = out.q_domain[n];

    UnionFind uf;
    for (int k = 0; k <= D; ++k)
      for (const auto& c : t2.graph.carrier.cells(k)) uf.find(c);

    for (const auto& [w, pr] : t1.pairs) {
      const auto& [pi, y] = pr;
      int k = pi.dim;
      // y_n^0 = Id (x) l_n.
      std::string img0 = TensorTGraph::encode(pi, out.l[n][k].at(y));
      // y_n^1 through q_n, the left unit, and the pointing.
      const std::string& z = out.q[n][k].at(w);
      std::string img1 =
          TensorTGraph::encode(point_relabel(xn1.d(k, z), x), z);
      if (!t2.pairs.count(img0) || !t2.pairs.count(img1))
        throw std::runtime_error(
            "free_monoid_layer: node bound exhausted while forming the "
            "coequalizer relation");
      uf.unite(img0, img1);
    }

    // Build the quotient X_{n+2}: class representatives, induced structure.
    std::vector<std::map<std::string, std::vector<std::string>>> classes(D + 1);
    for (int k = 0; k <= D; ++k)
      for (const auto& c : t2.graph.carrier.cells(k))
        classes[k][uf.find(c)].push_back(c);

    TGraph xn2(x.base.n_colors, D);
    CellMap qn1(D + 1);
    for (int k = 0; k <= D; ++k) {
      for (const auto& [rep, members] : classes[k]) {
        for (const auto& m : members) {
          if (!(t2.graph.d(k, m) == t2.graph.d(k, rep)) ||
              t2.graph.c(k, m) != t2.graph.c(k, rep))
            throw std::runtime_error(
                "free_monoid_layer: induced d/c ill-defined on a class");
          qn1[k][m] = rep;
        }
        if (k == 0) {
          xn2.add(0, rep, t2.graph.d(0, rep), t2.graph.c(0, rep));
        } else {
          std::string s = uf.find(t2.graph.carrier.src(k, rep));
          std::string t = uf.find(t2.graph.carrier.tgt(k, rep));
          for (const auto& m : members) {
            if (uf.find(t2.graph.carrier.src(k, m)) != s ||
                uf.find(t2.graph.carrier.tgt(k, m)) != t)
              throw std::runtime_error(
                  "free_monoid_layer: induced src/tgt ill-defined on a class");
          }
          xn2.add(k, rep, s, t, t2.graph.d(k, rep), t2.graph.c(k, rep));
        }
      }
    }

    // l_{n+1}(z) = q_{n+1}(T(p)(d z), z).
    CellMap ln1(D + 1);
    for (int k = 0; k <= D; ++k) {
      for (const auto& z : xn1.carrier.cells(k)) {
        std::string w = TensorTGraph::encode(point_relabel(xn1.d(k, z), x), z);
        auto it = qn1[k].find(w);
        if (it == qn1[k].end())
          throw std::runtime_error(
              "free_monoid_layer: node bound exhausted computing l");
        ln1[k][z] = it->second;
      }
    }

    out.layer.push_back(std::move(xn2));
    out.q_domain.push_back(std::move(t2));
    out.q.push_back(std::move(qn1));
    out.l.push_back(std::move(ln1));
    out.classes.push_back(std::move(classes));
  }
  return out;
}

}  // namespace globop
