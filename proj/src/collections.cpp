#include "globop/collections.hpp"

namespace globop {

namespace {

std::string u_name(int m) { return "u_" + std::to_string(m); }
std::string mu_name(int p, int m) {
  return "mu_" + std::to_string(p) + "^" + std::to_string(m);
}
std::string v_name(int m) { return "v_" + std::to_string(m); }
std::string vv_name(int p, int m) {
  return "v_" + std::to_string(p) + "^" + std::to_string(m);
}
std::string f_name(int m) { return "F^" + std::to_string(m); }
std::string h_name(int m) { return "H^" + std::to_string(m); }
std::string alpha0_name(int m) { return "alpha_0^" + std::to_string(m); }
std::string beta0_name(int m) { return "beta_0^" + std::to_string(m); }
std::string alpha_name(int p) { return "alpha_" + std::to_string(p); }
std::string beta_name(int p) { return "beta_" + std::to_string(p); }
std::string xi_name(int n) { return "xi_" + std::to_string(n); }

// The composition-system schema for one color: units and binary
// compositions, with boundaries as in the table for C^0.
void add_color_copy(Collection& c, int color, const std::string& unit_stem,
                    auto comp_name) {
  for (int m = 0; m <= c.max_dim(); ++m) {
    Generator u;
    u.name = unit_stem + std::to_string(m);
    u.dim = m;
    if (m >= 1) u.src = u.tgt = unit_stem + std::to_string(m - 1);
    u.arity = color_globe(color, m);
    u.coarity = color;
    u.point = true;
    u.point_color = color;
    c.add(std::move(u));
  }
  for (int m = 1; m <= c.max_dim(); ++m) {
    for (int p = 0; p < m; ++p) {
      Generator mu;
      mu.name = comp_name(p, m);
      mu.dim = m;
      if (p == m - 1)
        mu.src = mu.tgt = unit_stem + std::to_string(m - 1);
      else
        mu.src = mu.tgt = comp_name(p, m - 1);
      mu.arity = glue(color_globe(color, m), color_globe(color, m), p);
      mu.coarity = color;
      c.add(std::move(mu));
    }
  }
}

}  // namespace

void Collection::add(Generator g) {
  if (g.dim < 0 || g.dim > max_dim_)
    throw std::invalid_argument("generator dimension out of range: " + g.name);
  if (find(g.name))
    throw std::invalid_argument("duplicate generator name: " + g.name);
  gens_[g.dim].push_back(std::move(g));
}

const Generator& Collection::at(int dim, const std::string& name) const {
  for (const auto& g : gens_.at(dim))
    if (g.name == name) return g;
  throw std::out_of_range("no generator " + name + " at dim " + std::to_string(dim));
}

const Generator* Collection::find(const std::string& name) const {
  for (const auto& dim_gens : gens_)
    for (const auto& g : dim_gens)
      if (g.name == name) return &g;
  return nullptr;
}

bool Collection::has(int dim, const std::string& name) const {
  for (const auto& g : gens_.at(dim))
    if (g.name == name) return true;
  return false;
}

const Generator& Collection::point(int color, int dim) const {
  for (const auto& g : gens_.at(dim))
    if (g.point && g.point_color == color) return g;
  throw std::out_of_range("no point generator for color " + std::to_string(color));
}

PointedTGraph Collection::realize() const {
  PointedTGraph out;
  out.base = TGraph(n_colors_, max_dim_);
  out.point.resize(max_dim_ + 1);
  for (int k = 0; k <= max_dim_; ++k) out.point[k].resize(n_colors_);
  for (int k = 0; k <= max_dim_; ++k) {
    for (const auto& g : gens_[k]) {
      if (k == 0)
        out.base.add(0, g.name, g.arity, g.coarity);
      else
        out.base.add(k, g.name, g.src, g.tgt, g.arity, g.coarity);
      if (g.point) out.point[k][g.point_color - 1] = g.name;
    }
  }
  return out;
}

Collection build_C0(int max_dim) {
  if (max_dim < 1) throw std::invalid_argument("C^0 needs max_dim >= 1");
  Collection c(1, max_dim);
  add_color_copy(c, 1, "u_", mu_name);
  return c;
}

Collection build_C(int max_dim) {
  if (max_dim < 1) throw std::invalid_argument("C needs max_dim >= 1");
  Collection c(2, max_dim);
  add_color_copy(c, 1, "u_", mu_name);
  add_color_copy(c, 2, "v_", vv_name);
  return c;
}

Collection build_Cn(int n, int max_dim) {
  if (n == 0) return build_C0(max_dim);
  if (n >= 3 && max_dim < n)
    throw std::invalid_argument("xi_" + std::to_string(n) + " needs max_dim >= " +
                                std::to_string(n));
  Collection c = build_C(max_dim);
  auto add_functor_symbols = [&](auto stem) {
    for (int m = 0; m <= max_dim; ++m) {
      Generator f;
      f.name = stem(m);
      f.dim = m;
      if (m >= 1) f.src = f.tgt = stem(m - 1);
      f.arity = color_globe(1, m);
      f.coarity = 2;
      c.add(std::move(f));
    }
  };
  if (n == 1) {
    add_functor_symbols(f_name);
  } else if (n == 2) {
    add_functor_symbols(f_name);
    add_functor_symbols(h_name);
    Generator tau;
    tau.name = "tau";
    tau.dim = 1;
    tau.src = f_name(0);
    tau.tgt = h_name(0);
    tau.arity = degenerate(color_globe(1, 0), 1);
    tau.coarity = 2;
    c.add(std::move(tau));
  } else {
    add_functor_symbols(alpha0_name);
    add_functor_symbols(beta0_name);
    for (int p = 1; p <= n - 1; ++p) {
      for (bool beta : {false, true}) {
        Generator g;
        g.name = beta ? beta_name(p) : alpha_name(p);
        g.dim = p;
        if (p == 1) {
          g.src = alpha0_name(0);
          g.tgt = beta0_name(0);
        } else {
          g.src = alpha_name(p - 1);
          g.tgt = beta_name(p - 1);
        }
        g.arity = degenerate(color_globe(1, 0), p);
        g.coarity = 2;
        c.add(std::move(g));
      }
    }
    Generator xi;
    xi.name = xi_name(n);
    xi.dim = n;
    xi.src = alpha_name(n - 1);
    xi.tgt = beta_name(n - 1);
    xi.arity = degenerate(color_globe(1, 0), n);
    xi.coarity = 2;
    c.add(std::move(xi));
  }
  return c;
}

CoglobularMap delta(int n, int max_dim) {
  CoglobularMap m;
  m.level = n;
  m.kappa = false;
  Collection src = build_Cn(n, max_dim);
  for (int k = 0; k <= max_dim; ++k) {
    for (const auto& g : src.gens(k)) {
      std::string image = g.name;
      if (n == 2) {
        if (g.name == "tau") image = alpha_name(1);
        else if (g.name.rfind("F^", 0) == 0) image = alpha0_name(g.dim);
        else if (g.name.rfind("H^", 0) == 0) image = beta0_name(g.dim);
      } else if (n >= 3 && g.name == xi_name(n)) {
        image = alpha_name(n);
      }
      m.gen_map[g.name] = image;
    }
  }
  return m;
}

CoglobularMap kappa(int n, int max_dim) {
  CoglobularMap m;
  m.level = n;
  m.kappa = true;
  Collection src = build_Cn(n, max_dim);
  for (int k = 0; k <= max_dim; ++k) {
    for (const auto& g : src.gens(k)) {
      std::string image = g.name;
      if (n == 0) {
        if (g.name.rfind("u_", 0) == 0) image = v_name(g.dim);
        else image = "v_" + g.name.substr(3);  // mu_p^m -> v_p^m
      } else if (n == 1) {
        if (g.name.rfind("F^", 0) == 0) image = h_name(g.dim);
      } else if (n == 2) {
        if (g.name == "tau") image = beta_name(1);
        else if (g.name.rfind("F^", 0) == 0) image = alpha0_name(g.dim);
        else if (g.name.rfind("H^", 0) == 0) image = beta0_name(g.dim);
      } else if (g.name == xi_name(n)) {
        image = beta_name(n);
      }
      m.gen_map[g.name] = image;
    }
  }
  return m;
}

namespace {

Report check_one_map(const CoglobularMap& m, const Collection& src,
                     const Collection& dst) {
  Report r;
  for (int k = 0; k <= src.max_dim(); ++k) {
    for (const auto& g : src.gens(k)) {
      std::string img;
      try {
        img = m(g.name);
      } catch (const std::out_of_range&) {
        r.add(k, g.name, "unmapped generator");
        continue;
      }
      if (!dst.has(k, img)) {
        r.add(k, g.name, "image " + img + " missing at dim " + std::to_string(k));
        continue;
      }
      const Generator& h = dst.at(k, img);
      if (k >= 1) {
        if (m(g.src) != h.src) r.add(k, g.name, "src not preserved");
        if (m(g.tgt) != h.tgt) r.add(k, g.name, "tgt not preserved");
      }
      Shape recolored = map_labels<int, int>(
          g.arity, [&](const Sector&, int col) { return m.color_map(col); });
      if (!(recolored == h.arity)) r.add(k, g.name, "arity not preserved");
      if (m.color_map(g.coarity) != h.coarity) r.add(k, g.name, "coarity not preserved");
      if (g.point) {
        if (!h.point || h.point_color != m.color_map(g.point_color))
          r.add(k, g.name, "pointing not preserved");
      }
    }
  }
  return r;
}

}  // namespace

Report check_coglobular(int n_max, int max_dim) {
  Report r;
  std::vector<Collection> cs;
  for (int n = 0; n <= n_max + 2; ++n) cs.push_back(build_Cn(n, max_dim));
  for (int n = 0; n <= n_max; ++n) {
    CoglobularMap d1 = delta(n, max_dim), k1 = kappa(n, max_dim);
    r.merge(check_one_map(d1, cs[n], cs[n + 1]));
    r.merge(check_one_map(k1, cs[n], cs[n + 1]));
    // Coglobular identities: delta delta = kappa delta, delta kappa = kappa kappa.
    CoglobularMap d2 = delta(n + 1, max_dim), k2 = kappa(n + 1, max_dim);
    for (int k = 0; k <= max_dim; ++k) {
      for (const auto& g : cs[n].gens(k)) {
        if (d2(d1(g.name)) != k2(d1(g.name)))
          r.add(k, g.name, "delta.delta != kappa.delta at n=" + std::to_string(n));
        if (d2(k1(g.name)) != k2(k1(g.name)))
          r.add(k, g.name, "delta.kappa != kappa.kappa at n=" + std::to_string(n));
      }
    }
  }
  return r;
}

}  // namespace globop
