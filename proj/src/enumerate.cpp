#include "globop/enumerate.hpp"

#include <algorithm>
#include <set>

namespace globop {

namespace {

struct ArgSearch {
  const Tree& tree;
  const Shape& want;
  const std::vector<std::vector<Term>>& pool;
  long long budget;
  std::vector<Sector> sectors;
  std::vector<Sector> leaves;
  std::map<Sector, Term> assign;
  std::vector<TermDiagram> out;

  ArgSearch(const Term& head, const std::vector<std::vector<Term>>& pool,
            long long budget)
      : tree(head.arity().tree), want(head.arity()), pool(pool), budget(budget) {
    sectors = sectors_of(tree);
    for (const auto& s : sectors)
      if (tree.kid_count(s.node) == 0) leaves.push_back(s);
  }

  bool finish(int dim) {
    TermDiagram d;
    d.dim = dim;
    d.tree = tree;
    d.labels = assign;
    for (auto it = sectors.rbegin(); it != sectors.rend(); ++it) {
      const Sector& s = *it;
      if (tree.kid_count(s.node) == 0) continue;
      Tree::Addr child = s.node;
      child.push_back(s.gap == 0 ? 0 : s.gap - 1);
      auto found = d.labels.find(Sector{child, 0});
      if (found == d.labels.end()) return false;
      const Term& t = found->second;
      d.labels[s] = s.gap == 0 ? t.src() : t.tgt();
    }
    for (const auto& s : sectors) {
      const Term& t = d.labels.at(s);
      if (t.coarity() != want.at(s)) return false;
      if (s.level() >= 1) {
        if (!(d.labels.at(src_sector(s)) == t.src())) return false;
        if (!(d.labels.at(tgt_sector(s)) == t.tgt())) return false;
      }
    }
    out.push_back(std::move(d));
    return true;
  }

  void run(size_t i, long long spent, int dim) {
    if (i == leaves.size()) {
      finish(dim);
      return;
    }
    const Sector& leaf = leaves[i];
    for (const Term& cand : pool.at(leaf.level())) {
      if (cand.dim() != leaf.level()) continue;
      if (cand.coarity() != want.at(leaf)) continue;
      long long next = spent + cand.size();
      if (next > budget) continue;
      assign[leaf] = cand;
      run(i + 1, next, dim);
    }
    assign.erase(leaf);
  }
};

}  // namespace

std::vector<TermDiagram> enumerate_args(
    const Term& head, const std::vector<std::vector<Term>>& pool_by_dim,
    long long leaf_budget) {
  ArgSearch search(head, pool_by_dim, leaf_budget);
  search.run(0, 0, head.dim());
  return search.out;
}

std::vector<Term> enumerate_cells(const Collection& coll, int dim,
                                  long long max_size, bool level0_brackets) {
  // by_dim[d][s]: normal forms of dimension d and size exactly s.
  std::vector<std::vector<std::vector<Term>>> by_dim(
      dim + 1, std::vector<std::vector<Term>>(max_size + 1));
  std::vector<std::set<Term>> seen(dim + 1);

  auto flat_pool = [&](int d) {
    std::vector<Term> all;
    for (const auto& bucket : by_dim[d])
      all.insert(all.end(), bucket.begin(), bucket.end());
    return all;
  };

  for (int d = 0; d <= dim; ++d) {
    std::vector<std::vector<Term>> pools(d + 1);
    for (int lower = 0; lower < d; ++lower) pools[lower] = flat_pool(lower);
    for (long long s = 1; s <= max_size; ++s) {
      std::vector<Term> bucket;
      auto emit = [&](const Term& t) {
        if (t.dim() != d || t.size() != s) return;
        if (seen[d].insert(t).second) bucket.push_back(t);
      };
      if (s == 1)
        for (const auto& g : coll.gens(d)) emit(make_gen(coll, g.name));
      if (d >= 1 && (d >= 2 || level0_brackets)) {
        for (const auto& lo : flat_pool(d - 1)) {
          for (const auto& hi : flat_pool(d - 1)) {
            if (1 + std::max(lo.size(), hi.size()) != s) continue;
            try {
              emit(make_bracket(lo, hi));
            } catch (const NotParallel&) {
            }
          }
        }
      }
      // Composites: heads are generators or brackets of this dimension.
      std::vector<Term> heads;
      for (const auto& g : coll.gens(d)) {
        Term t = make_gen(coll, g.name);
        if (!t.is_point_unit()) heads.push_back(t);
      }
      for (const auto& bucketed : by_dim[d])
        for (const auto& t : bucketed)
          if (t.kind() == Term::Kind::bracket) heads.push_back(t);
      for (const Term& h : heads) {
        long long leaf_budget = s - 1 - h.size();
        if (leaf_budget < 1) continue;
        pools[d] = flat_pool(d);
        for (const auto& args : enumerate_args(h, pools, leaf_budget)) {
          Term t;
          try {
            t = compose(h, args);
          } catch (const TermTypeError&) {
            continue;
          }
          if (t.kind() != Term::Kind::comp) continue;  // reduced to something smaller
          emit(t);
        }
      }
      by_dim[d][s] = std::move(bucket);
    }
  }

  std::vector<Term> out = flat_pool(dim);
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.encode() < b.encode();
  });
  return out;
}

}  // namespace globop
