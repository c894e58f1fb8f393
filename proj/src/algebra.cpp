#include "globop/algebra.hpp"

#include <algorithm>

namespace globop {

ACell boundary_cell(const Algebra& a, int dim, const ACell& c, int k, Side side) {
  ACell cur = c;
  for (int d = dim; d > k; --d)
    cur = side == Side::source ? a.src(d, cur) : a.tgt(d, cur);
  return cur;
}

APasting algebra_globe(const Algebra& a, int cell_dim, const ACell& c, int to_dim) {
  return globe<ACell>(
      c, cell_dim, to_dim,
      [&](const ACell& x, int d) { return a.src(d, x); },
      [&](const ACell& x, int d) { return a.tgt(d, x); });
}

namespace {

Shape pasting_skeleton(const Algebra& a, const APasting& pi) {
  return map_pasting(pi, [&](int lvl, const ACell& c) { return a.color(lvl, c); });
}

void require_compatible(const Algebra& a, const APasting& pi, const Shape& arity,
                        const std::string& what) {
  Shape skel = pasting_skeleton(a, pi);
  if (!(skel == arity))
    throw EvalError("evaluate: pasting does not match the arity of " + what +
                    ": " + encode_diagram(skel) + " vs " + encode_diagram(arity));
}

ACell top_of(const APasting& pi) {
  return pi.at(Sector{Tree::Addr(pi.tree.height(), 0), 0});
}

// Splits pi along the flattening of the argument arities and evaluates each
// slice, producing the evaluated outer pasting.
template <class EvalLabel>
APasting evaluate_args(const Tree& args_tree, int args_dim,
                       const FlattenResult<int>& flat, const APasting& pi,
                       EvalLabel eval_label) {
  APasting outer;
  outer.dim = args_dim;
  outer.tree = args_tree;
  for (const auto& [s, prov] : flat.prov) {
    APasting slice;
    slice.dim = s.level();
    for (const auto& [u, target] : prov) slice.labels.emplace(u, pi.at(target));
    outer.labels.emplace(s, ACell());
    // The slice tree is the arity tree of the label at s; recover it from
    // the provenance keys' own tree, supplied by the caller.
    outer.labels[s] = eval_label(s, std::move(slice));
  }
  return outer;
}

}  // namespace

ACell evaluate(const Algebra& a, const APasting& pi, const Term& b) {
  if (pi.dim != b.dim())
    throw EvalError("evaluate: dimension mismatch for " + b.encode());
  require_compatible(a, pi, b.arity(), b.encode());

  switch (b.kind()) {
    case Term::Kind::gen:
      if (b.is_point_unit()) return top_of(pi);
      return a.interp(b.gen(), pi);
    case Term::Kind::comp: {
      const TermDiagram& args = b.args();
      FlattenResult<int> flat = arity_flatten(args);
      APasting outer = evaluate_args(
          args.tree, args.dim, flat, pi, [&](const Sector& s, APasting slice) {
            const Term& label = args.at(s);
            slice.tree = label.arity().tree;
            return evaluate(a, slice, label);
          });
      return evaluate(a, outer, b.head());
    }
    case Term::Kind::bracket: {
      APasting core = pi;
      core.dim = b.dim() - 1;
      ACell lo = evaluate(a, core, b.lo());
      ACell hi = evaluate(a, core, b.hi());
      return a.fill(lo, hi, b.dim() - 1);
    }
  }
  throw EvalError("evaluate: unreachable");
}

namespace {

int raw_dim(const RawTerm& t, const Collection& coll) {
  switch (t.kind) {
    case Term::Kind::gen:
      if (t.point_dim >= 0) return t.point_dim;
      return coll.find(t.gen_name) ? coll.find(t.gen_name)->dim : -1;
    case Term::Kind::comp:
      return t.args_dim;
    case Term::Kind::bracket:
      return raw_dim(*t.lo, coll) + 1;
  }
  return -1;
}

Shape raw_arity(const RawTerm& t, const Collection& coll) {
  switch (t.kind) {
    case Term::Kind::gen: {
      if (t.point_dim >= 0) return coll.point(t.point_color, t.point_dim).arity;
      const Generator* g = coll.find(t.gen_name);
      if (!g) throw EvalError("unknown generator " + t.gen_name);
      return g->arity;
    }
    case Term::Kind::comp: {
      Diagram<Shape> arities;
      arities.dim = t.args_dim;
      arities.tree = t.args_tree;
      auto sectors = sectors_of(t.args_tree);
      for (size_t i = 0; i < sectors.size(); ++i)
        arities.labels.emplace(sectors[i], raw_arity(*t.args_labels[i], coll));
      return flatten(arities).diagram;
    }
    case Term::Kind::bracket:
      return degenerate(raw_arity(*t.lo, coll), raw_dim(t, coll));
  }
  throw EvalError("raw_arity: unreachable");
}

}  // namespace

ACell evaluate_raw(const Algebra& a, const APasting& pi, const RawTerm& b) {
  const Collection& coll = a.collection();
  switch (b.kind) {
    case Term::Kind::gen: {
      const Generator& g = b.point_dim >= 0
                               ? coll.point(b.point_color, b.point_dim)
                               : *coll.find(b.gen_name);
      if (g.point) return top_of(pi);
      return a.interp(g, pi);
    }
    case Term::Kind::comp: {
      Diagram<Shape> arities;
      arities.dim = b.args_dim;
      arities.tree = b.args_tree;
      auto sectors = sectors_of(b.args_tree);
      std::map<Sector, const RawTerm*> by_sector;
      for (size_t i = 0; i < sectors.size(); ++i) {
        arities.labels.emplace(sectors[i], raw_arity(*b.args_labels[i], coll));
        by_sector[sectors[i]] = b.args_labels[i].get();
      }
      FlattenResult<int> flat = flatten(arities);
      APasting outer = evaluate_args(
          b.args_tree, b.args_dim, flat, pi,
          [&](const Sector& s, APasting slice) {
            slice.tree = arities.at(s).tree;
            return evaluate_raw(a, slice, *by_sector.at(s));
          });
      return evaluate_raw(a, outer, *b.head);
    }
    case Term::Kind::bracket: {
      APasting core = pi;
      core.dim = pi.dim - 1;
      ACell lo = evaluate_raw(a, core, *b.lo);
      ACell hi = evaluate_raw(a, core, *b.hi);
      return a.fill(lo, hi, pi.dim - 1);
    }
  }
  throw EvalError("evaluate_raw: unreachable");
}

std::vector<MonadCell> monad_cells(const Algebra& a, int dim, int tree_bound,
                                   long long term_size) {
  CellUniverse u;
  u.max_dim = a.max_dim();
  u.cells = [&a](int d) { return a.cells(d); };
  u.src = [&a](int d, const ACell& c) { return a.src(d, c); };
  u.tgt = [&a](int d, const ACell& c) { return a.tgt(d, c); };

  std::vector<MonadCell> out;
  auto diagrams = enumerate_diagrams(u, dim, tree_bound);
  auto terms = enumerate_cells(a.collection(), dim, term_size);
  for (const auto& pi : diagrams) {
    Shape skel = pasting_skeleton(a, pi);
    for (const auto& t : terms)
      if (t.arity() == skel) out.push_back({pi, t});
  }
  return out;
}

Report check_algebra_axioms(const Algebra& a, const CheckBounds& bounds) {
  Report r;
  const Collection& coll = a.collection();

  // (a) Unit law: nu(eta(x), lambda(color)) = x.
  for (int d = 0; d <= std::min(bounds.max_dim, a.max_dim()); ++d) {
    for (const ACell& x : a.cells(d)) {
      Term unit = make_gen(coll, coll.point(a.color(d, x), d).name);
      ACell got = evaluate(a, algebra_globe(a, d, x, d), unit);
      if (got != x) r.add(d, x, "unit law fails: nu(eta(x), unit) = " + got);
    }
  }

  // (b)+(c): multiplicativity and normalization invariance on bounded
  // samples: the raw structural recursion agrees with evaluation of the
  // normal form, including an extra wrapped layer.
  for (int d = 0; d <= std::min(bounds.max_dim, a.max_dim()); ++d) {
    for (const auto& [pi, t] : monad_cells(a, d, bounds.tree_bound, bounds.term_size)) {
      ACell direct, renorm;
      try {
        direct = evaluate_raw(a, pi, *to_raw(t));
        renorm = evaluate(a, pi, t);
      } catch (const AlgebraGap& gap) {
        r.add(d, t.encode(), std::string("oracle gap: ") + gap.what());
        continue;
      }
      if (direct != renorm)
        r.add(d, t.encode(),
              "normalization changes the value: " + direct + " vs " + renorm);

      // Two-layer sample: gamma(t; units) evaluated raw must agree with t.
      auto raw2 = std::make_shared<RawTerm>();
      raw2->kind = Term::Kind::comp;
      raw2->head = to_raw(t);
      raw2->args_dim = d;
      raw2->args_tree = t.arity().tree;
      for (const auto& s : sectors_of(t.arity().tree)) {
        auto unit = std::make_shared<RawTerm>();
        unit->kind = Term::Kind::gen;
        unit->point_color = t.arity().at(s);
        unit->point_dim = s.level();
        raw2->args_labels.push_back(unit);
      }
      ACell two = evaluate_raw(a, pi, *raw2);
      if (two != renorm)
        r.add(d, t.encode(), "multiplicativity fails on the unit layer");
    }
  }
  return r;
}

namespace {

class MappedAlgebra : public Algebra {
 public:
  MappedAlgebra(std::shared_ptr<const Algebra> base, bool use_kappa)
      : base_(std::move(base)), kappa_(use_kappa) {
    int n = base_->level();
    if (n < 1) throw std::invalid_argument("no source/target below level 0");
    map_ = kappa_ ? kappa(n - 1, base_->max_dim()) : delta(n - 1, base_->max_dim());
    coll_ = build_Cn(n - 1, base_->max_dim());
    restrict_color_ = n == 1 ? (kappa_ ? 2 : 1) : 0;
  }

  int level() const override { return base_->level() - 1; }
  const Collection& collection() const override { return coll_; }
  int max_dim() const override { return base_->max_dim(); }
  int declared_dim() const override { return base_->declared_dim(); }

  int color(int dim, const ACell& c) const override {
    int col = base_->color(dim, c);
    if (restrict_color_) {
      if (col != restrict_color_)
        throw EvalError("cell " + c + " is outside the restricted color");
      return 1;
    }
    return col;
  }
  ACell src(int dim, const ACell& c) const override { return base_->src(dim, c); }
  ACell tgt(int dim, const ACell& c) const override { return base_->tgt(dim, c); }
  std::vector<ACell> cells(int dim) const override {
    if (!restrict_color_) return base_->cells(dim);
    std::vector<ACell> out;
    for (const auto& c : base_->cells(dim))
      if (base_->color(dim, c) == restrict_color_) out.push_back(c);
    return out;
  }

  ACell interp(const Generator& g, const APasting& pasting) const override {
    const Generator& lifted =
        base_->collection().at(g.dim, map_(g.name));
    return base_->interp(lifted, pasting);
  }
  ACell fill(const ACell& lo, const ACell& hi, int level) const override {
    return base_->fill(lo, hi, level);
  }
  std::optional<ACell> degeneracy_base(int dim, const ACell& c) const override {
    return base_->degeneracy_base(dim, c);
  }

 private:
  std::shared_ptr<const Algebra> base_;
  bool kappa_;
  CoglobularMap map_;
  Collection coll_;
  int restrict_color_ = 0;
};

}  // namespace

std::shared_ptr<const Algebra> source_algebra(std::shared_ptr<const Algebra> a) {
  return std::make_shared<MappedAlgebra>(std::move(a), false);
}

std::shared_ptr<const Algebra> target_algebra(std::shared_ptr<const Algebra> a) {
  return std::make_shared<MappedAlgebra>(std::move(a), true);
}

Report check_consistence(std::shared_ptr<const Algebra> a, int p,
                         const CheckBounds& bounds) {
  Report r;
  int n = a->level();
  if (p >= n) {
    r.add(0, "-", "consistence needs p < level");
    return r;
  }
  for (bool use_kappa : {false, true}) {
    // The iterated side algebra and the composite generator map.
    std::shared_ptr<const Algebra> side = a;
    for (int lvl = n; lvl > p; --lvl)
      side = use_kappa ? target_algebra(side) : source_algebra(side);

    Collection cp = build_Cn(p, a->max_dim());
    std::vector<CoglobularMap> maps;
    std::vector<Collection> colls;
    for (int lvl = p; lvl < n; ++lvl) {
      maps.push_back(use_kappa ? kappa(lvl, a->max_dim()) : delta(lvl, a->max_dim()));
      colls.push_back(build_Cn(lvl + 1, a->max_dim()));
    }

    for (int d = 0; d <= std::min(bounds.max_dim, a->max_dim()); ++d) {
      for (const auto& [pi, b] : monad_cells(*side, d, bounds.tree_bound,
                                             bounds.term_size)) {
        Term lifted = b;
        for (size_t i = 0; i < maps.size(); ++i)
          lifted = lift(maps[i], colls[i], lifted);
        ACell via_lift, via_side;
        try {
          via_lift = evaluate(*a, pi, lifted);
          via_side = evaluate(*side, pi, b);
        } catch (const AlgebraGap& gap) {
          r.add(d, b.encode(), std::string("oracle gap: ") + gap.what());
          continue;
        }
        if (via_lift != via_side)
          r.add(d, b.encode(),
                std::string(use_kappa ? "kappa" : "delta") +
                    "-consistence fails: " + via_lift + " vs " + via_side);
      }
    }
  }
  return r;
}

ACell Magma::compose2(const ACell& x, const ACell& y, int p, int n) const {
  const Collection& coll = alg->collection();
  int col = alg->color(n, x);
  std::string gen = (col == 1 ? "mu_" : "v_") + std::to_string(p) + "^" +
                    std::to_string(n);
  APasting pi = glue(algebra_globe(*alg, n, x, n), algebra_globe(*alg, n, y, n), p);
  return evaluate(*alg, pi, make_gen(coll, gen));
}

ACell Magma::identity(const ACell& x, int n) const {
  const Collection& coll = alg->collection();
  int col = alg->color(n, x);
  std::string unit = (col == 1 ? "u_" : "v_") + std::to_string(n);
  Term br = make_bracket(make_gen(coll, unit), make_gen(coll, unit));
  APasting pi = degenerate(algebra_globe(*alg, n, x, n), n + 1);
  return evaluate(*alg, pi, br);
}

Magma induced_magma(const Algebra& a) { return Magma{&a}; }

Report check_dimension(const Algebra& a) {
  Report r;
  Magma m = induced_magma(a);
  for (int n = a.declared_dim(); n < a.max_dim(); ++n) {
    for (const ACell& x : a.cells(n)) {
      ACell id;
      try {
        id = m.identity(x, n);
      } catch (const AlgebraGap& gap) {
        r.add(n, x, std::string("oracle gap: ") + gap.what());
        continue;
      }
      auto base = a.degeneracy_base(n + 1, id);
      if (!base || *base != x)
        r.add(n, x, "identity cell 1_x is not degenerate over x: " + id);
    }
  }
  return r;
}

}  // namespace globop
