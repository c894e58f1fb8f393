#include "globop/glob.hpp"

#include <sstream>

namespace globop {

std::string Report::to_string() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (const auto& v : issues)
    out << "dim " << v.dim << " cell " << v.cell << ": " << v.message << "\n";
  return out.str();
}

GlobularSet::GlobularSet(int max_dim) : max_dim_(max_dim) {
  if (max_dim < 0) throw std::invalid_argument("negative truncation dimension");
  cells_.resize(max_dim_ + 1);
  src_.resize(max_dim_ + 1);
  tgt_.resize(max_dim_ + 1);
}

void GlobularSet::add_cell(int dim, const std::string& name) {
  if (dim != 0) throw std::invalid_argument("cell above dim 0 needs src/tgt: " + name);
  if (has_cell(0, name)) throw std::invalid_argument("duplicate cell " + name);
  cells_[0].push_back(name);
}

void GlobularSet::add_cell(int dim, const std::string& name,
                           const std::string& src, const std::string& tgt) {
  if (dim < 1 || dim > max_dim_)
    throw std::invalid_argument("cell dimension out of range: " + name);
  if (has_cell(dim, name)) throw std::invalid_argument("duplicate cell " + name);
  cells_[dim].push_back(name);
  src_[dim][name] = src;
  tgt_[dim][name] = tgt;
}

const std::vector<std::string>& GlobularSet::cells(int dim) const {
  static const std::vector<std::string> empty;
  if (dim < 0 || dim > max_dim_) return empty;
  return cells_[dim];
}

bool GlobularSet::has_cell(int dim, const std::string& name) const {
  if (dim < 0 || dim > max_dim_) return false;
  for (const auto& c : cells_[dim])
    if (c == name) return true;
  return false;
}

const std::string& GlobularSet::src(int dim, const std::string& name) const {
  auto it = src_.at(dim).find(name);
  if (it == src_.at(dim).end())
    throw std::out_of_range("no src for " + name + " at dim " + std::to_string(dim));
  return it->second;
}

const std::string& GlobularSet::tgt(int dim, const std::string& name) const {
  auto it = tgt_.at(dim).find(name);
  if (it == tgt_.at(dim).end())
    throw std::out_of_range("no tgt for " + name + " at dim " + std::to_string(dim));
  return it->second;
}

const std::string& GlobularSet::boundary(int dim, const std::string& name,
                                         int k, Side side) const {
  if (k > dim) throw std::invalid_argument("boundary above cell dimension");
  const std::string* cur = &name;
  for (int d = dim; d > k; --d)
    cur = (side == Side::source) ? &src(d, *cur) : &tgt(d, *cur);
  return *cur;
}

Report validate_globular(const GlobularSet& g) {
  Report r;
  for (int k = 1; k <= g.max_dim(); ++k) {
    for (const auto& x : g.cells(k)) {
      std::string s, t;
      try {
        s = g.src(k, x);
        t = g.tgt(k, x);
      } catch (const std::out_of_range&) {
        r.add(k, x, "src/tgt not total");
        continue;
      }
      if (!g.has_cell(k - 1, s)) r.add(k, x, "src refers to missing cell " + s);
      if (!g.has_cell(k - 1, t)) r.add(k, x, "tgt refers to missing cell " + t);
      if (k >= 2 && g.has_cell(k - 1, s) && g.has_cell(k - 1, t)) {
        if (g.src(k - 1, s) != g.src(k - 1, t))
          r.add(k, x, "src(src)!=src(tgt)");
        if (g.tgt(k - 1, s) != g.tgt(k - 1, t))
          r.add(k, x, "tgt(src)!=tgt(tgt)");
      }
    }
  }
  return r;
}

bool is_constant(const GlobularSet& g) {
  for (int k = 1; k <= g.max_dim(); ++k) {
    if (g.cells(k) != g.cells(0)) return false;
    for (const auto& x : g.cells(k))
      if (g.src(k, x) != x || g.tgt(k, x) != x) return false;
  }
  return true;
}

void ColoredGlobularSet::set_color(int dim, const std::string& cell, int color) {
  if (color < 1 || color > n_colors_)
    throw std::invalid_argument("color out of range for " + cell);
  color_[{dim, cell}] = color;
}

int ColoredGlobularSet::color(int dim, const std::string& cell) const {
  auto it = color_.find({dim, cell});
  if (it == color_.end())
    throw std::out_of_range("no color for " + cell + " at dim " + std::to_string(dim));
  return it->second;
}

Report validate_colored(const ColoredGlobularSet& g) {
  Report r = validate_globular(g.base());
  for (int k = 0; k <= g.base().max_dim(); ++k) {
    for (const auto& x : g.base().cells(k)) {
      int c;
      try {
        c = g.color(k, x);
      } catch (const std::out_of_range&) {
        r.add(k, x, "uncolored cell");
        continue;
      }
      if (k >= 1) {
        if (g.color(k - 1, g.base().src(k, x)) != c)
          r.add(k, x, "color not constant on src");
        if (g.color(k - 1, g.base().tgt(k, x)) != c)
          r.add(k, x, "color not constant on tgt");
      }
    }
  }
  return r;
}

GlobularSet color_restrict(const ColoredGlobularSet& g, int j) {
  if (j < 1 || j > g.n_colors())
    throw std::invalid_argument("color index out of range");
  GlobularSet out(g.base().max_dim());
  for (int k = 0; k <= g.base().max_dim(); ++k) {
    for (const auto& x : g.base().cells(k)) {
      if (g.color(k, x) != j) continue;
      if (k == 0)
        out.add_cell(0, x);
      else
        out.add_cell(k, x, g.base().src(k, x), g.base().tgt(k, x));
    }
  }
  return out;
}

bool check_morphism(const GlobularSet& g, const GlobularSet& h,
                    const CellMap& f, Report* why) {
  bool ok = true;
  auto fail = [&](int dim, const std::string& cell, const std::string& msg) {
    ok = false;
    if (why) why->add(dim, cell, msg);
  };
  if (static_cast<int>(f.size()) <= g.max_dim()) {
    fail(0, "-", "map not defined on all dimensions");
    return false;
  }
  for (int k = 0; k <= g.max_dim(); ++k) {
    for (const auto& x : g.cells(k)) {
      auto it = f[k].find(x);
      if (it == f[k].end()) {
        fail(k, x, "unmapped cell");
        continue;
      }
      if (!h.has_cell(k, it->second)) {
        fail(k, x, "image " + it->second + " missing (dimension mismatch?)");
        continue;
      }
      if (k >= 1) {
        if (f[k - 1].at(g.src(k, x)) != h.src(k, it->second))
          fail(k, x, "does not commute with src");
        if (f[k - 1].at(g.tgt(k, x)) != h.tgt(k, it->second))
          fail(k, x, "does not commute with tgt");
      }
    }
  }
  return ok;
}

CellMap identity_map(const GlobularSet& g) {
  CellMap f(g.max_dim() + 1);
  for (int k = 0; k <= g.max_dim(); ++k)
    for (const auto& x : g.cells(k)) f[k][x] = x;
  return f;
}

CellMap compose_maps(const CellMap& second, const CellMap& first) {
  CellMap out(first.size());
  for (size_t k = 0; k < first.size(); ++k)
    for (const auto& [x, y] : first[k]) out[k][x] = second[k].at(y);
  return out;
}

}  // namespace globop
