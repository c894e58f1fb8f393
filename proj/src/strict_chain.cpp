#include "globop/strict_chain.hpp"

namespace globop {

namespace {

constexpr int kObjects = 4;

class StrictChainAlgebra : public Algebra {
 public:
  StrictChainAlgebra(int level, int max_dim)
      : level_(level), max_dim_(max_dim), coll_(build_Cn(level, max_dim)) {
    if (level < 0 || level > 2)
      throw std::invalid_argument("strict chain algebra supports levels 0..2");
    for (int i = 0; i < kObjects; ++i)
      for (int j = i; j < kObjects; ++j) paths_.push_back({i, j});
  }

  int level() const override { return level_; }
  const Collection& collection() const override { return coll_; }
  int max_dim() const override { return max_dim_; }
  int declared_dim() const override { return 2; }

  int color(int, const ACell& c) const override {
    return c.find('\'') == std::string::npos ? 1 : 2;
  }

  ACell src(int dim, const ACell& c) const override { return bnd(dim, c, true); }
  ACell tgt(int dim, const ACell& c) const override { return bnd(dim, c, false); }

  std::vector<ACell> cells(int dim) const override {
    std::vector<ACell> out;
    int copies = level_ == 0 ? 0 : 1;  // the level-0 algebra is monochrome
    for (int primed = 0; primed <= copies; ++primed) {
      std::string tick = primed ? "'" : "";
      if (dim == 0) {
        for (int i = 0; i < kObjects; ++i) out.push_back(obj(i) + tick);
      } else if (dim == 1) {
        for (const auto& [i, j] : paths_) out.push_back(path_name(i, j) + tick);
      } else if (dim == 2) {
        for (const auto& [i, j] : paths_)
          out.push_back("i2:" + path_name(i, j) + tick);
      } else if (dim == 3) {
        for (const auto& [i, j] : paths_)
          out.push_back("i3:i2:" + path_name(i, j) + tick);
      }
    }
    return out;
  }

  ACell interp(const Generator& g, const APasting& pi) const override {
    const std::string& name = g.name;
    if (name.rfind("mu_", 0) == 0 || (name.rfind("v_", 0) == 0 && name.find('^') != std::string::npos)) {
      // Binary composition at level p: compose the two halves of the pasting.
      int p = std::stoi(name.substr(name.find('_') + 1, name.find('^')));
      return compose_pasting(pi, p, g.dim);
    }
    if (name.rfind("F^", 0) == 0 || name.rfind("H^", 0) == 0)
      return prime(top_label(pi));
    if (name == "tau") {
      // pi is the degenerate globe of a color-1 object w; tau_w = 1_{w'}.
      const ACell& w = pi.at(Sector{{}, 0});
      return identity1(prime(w));
    }
    throw AlgebraGap("strict chain: no interpretation for " + name);
  }

  ACell fill(const ACell& lo, const ACell& hi, int level) const override {
    if (lo != hi)
      throw AlgebraGap("strict chain: non-diagonal fill (" + lo + "," + hi + ")");
    if (level == 0) return identity1(lo);
    if (level == 1) return "i2:" + lo;
    if (level == 2) return "i3:" + lo;
    throw AlgebraGap("strict chain: fill level out of range");
  }

  std::optional<ACell> degeneracy_base(int dim, const ACell& c) const override {
    if (dim == 3 && c.rfind("i3:", 0) == 0) return c.substr(3);
    return std::nullopt;
  }

 private:
  static std::string obj(int i) { return "w" + std::to_string(i); }

  static std::string path_name(int i, int j) {
    if (i == j) return "1:" + obj(i);
    static const char* edges = "abc";
    return std::string(edges + i, edges + j);
  }

  static bool primed(const ACell& c) { return c.find('\'') != std::string::npos; }
  static std::string strip(const ACell& c) {
    std::string out = c;
    out.erase(std::remove(out.begin(), out.end(), '\''), out.end());
    return out;
  }
  static ACell prime(const ACell& c) { return strip(c) + "'"; }

  ACell identity1(const ACell& w) const {
    return primed(w) ? "1:" + strip(w) + "'" : "1:" + w;
  }

  std::pair<int, int> endpoints(const ACell& cell) const {
    std::string p = strip(cell);
    if (p.rfind("1:w", 0) == 0) {
      int i = p[3] - '0';
      return {i, i};
    }
    int i = p.front() - 'a';
    int j = p.back() - 'a' + 1;
    return {i, j};
  }

  ACell bnd(int dim, const ACell& c, bool source) const {
    std::string tick = primed(c) ? "'" : "";
    if (dim == 1) {
      auto [i, j] = endpoints(c);
      return obj(source ? i : j) + tick;
    }
    if (dim == 2 && c.rfind("i2:", 0) == 0) return c.substr(3);
    if (dim == 3 && c.rfind("i3:", 0) == 0) return c.substr(3);
    throw EvalError("strict chain: no boundary for " + c + " at dim " +
                    std::to_string(dim));
  }

  ACell compose1(const ACell& x, const ACell& y) const {
    // Path order: x then y.
    bool tick = primed(x);
    std::string a = strip(x), b = strip(y);
    if (a.rfind("1:", 0) == 0) return y;
    if (b.rfind("1:", 0) == 0) return x;
    auto [i, j] = endpoints(x);
    auto [k, l] = endpoints(y);
    if (j != k) throw EvalError("strict chain: non-composable paths " + x + "," + y);
    return path_name(i, l) + (tick ? "'" : "");
  }

  ACell compose_at(const ACell& x, const ACell& y, int p, int dim) const {
    if (dim == 1) return compose1(x, y);
    if (dim == 2) {
      if (p == 1) {
        if (x != y) throw EvalError("strict chain: distinct parallel 2-cells");
        return x;
      }
      return "i2:" + compose1(x.substr(3), y.substr(3));
    }
    // dim == 3: everything is a degeneracy i3:<2-cell>.
    if (p == 2) {
      if (x != y) throw EvalError("strict chain: distinct 3-cells");
      return x;
    }
    return "i3:" + compose_at(x.substr(3), y.substr(3), p, 2);
  }

  // Evaluates a two-part pasting (the arity of mu_p^m) by composing the two
  // top cells; works uniformly because the pasting is a gluing of globes.
  ACell compose_pasting(const APasting& pi, int p, int dim) const {
    // The tree is glue(linear(dim), linear(dim), p): the level-p node has two
    // children; the left/right top cells sit under them.
    Tree::Addr node(p, 0);
    Tree::Addr left = node, right = node;
    left.push_back(0);
    right.push_back(1);
    for (int d = p + 1; d < dim; ++d) {
      left.push_back(0);
      right.push_back(0);
    }
    return compose_at(pi.at(Sector{left, 0}), pi.at(Sector{right, 0}), p, dim);
  }

  const ACell& top_label(const APasting& pi) const {
    return pi.at(Sector{Tree::Addr(pi.tree.height(), 0), 0});
  }

  int level_;
  int max_dim_;
  Collection coll_;
  std::vector<std::pair<int, int>> paths_;
};

}  // namespace

std::shared_ptr<const Algebra> make_strict_chain(int level, int max_dim) {
  return std::make_shared<StrictChainAlgebra>(level, max_dim);
}

}  // namespace globop
