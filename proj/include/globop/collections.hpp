#pragma once

#include "globop/tgraph.hpp"

namespace globop {

struct Generator {
  std::string name;
  int dim = 0;
  std::string src, tgt;  // generator names, empty at dim 0
  Shape arity;
  int coarity = 1;
  bool point = false;  // image of the pointing lambda
  int point_color = 0;
};

/// A finite generator table for a pointed n-colored collection: the raw data
/// behind C^0, C, C^1, C^2 and C^n.
class Collection {
 public:
  Collection(int n_colors, int max_dim)
      : n_colors_(n_colors), max_dim_(max_dim), gens_(max_dim + 1) {}
  Collection() : Collection(1, 0) {}

  int n_colors() const { return n_colors_; }
  int max_dim() const { return max_dim_; }

  void add(Generator g);
  const std::vector<Generator>& gens(int dim) const { return gens_.at(dim); }
  const Generator& at(int dim, const std::string& name) const;
  const Generator* find(const std::string& name) const;  // names are globally unique
  bool has(int dim, const std::string& name) const;

  /// lambda: the unit generator over a color globe.
  const Generator& point(int color, int dim) const;

  PointedTGraph realize() const;

 private:
  int n_colors_;
  int max_dim_;
  std::vector<std::vector<Generator>> gens_;
};

/// Batanin's composition system C^0: u_m and mu_p^m, one color.
Collection build_C0(int max_dim);

/// The bicolored doubling C: u/mu in color 1, v/v_p^m in color 2.
Collection build_C(int max_dim);

/// C^n: C plus functor and transformation symbols. n = 0 gives C^0.
Collection build_Cn(int n, int max_dim);

/// A generator-name map C^n -> C^{n+1}; at level 0 it also recolors, the
/// delta side through color 1 and the kappa side through color 2.
struct CoglobularMap {
  int level = 0;
  bool kappa = false;
  std::map<std::string, std::string> gen_map;
  int color_map(int c) const { return level == 0 ? (kappa ? 2 : 1) : c; }

  const std::string& operator()(const std::string& gen) const {
    auto it = gen_map.find(gen);
    if (it == gen_map.end())
      throw std::out_of_range("coglobular map undefined on " + gen);
    return it->second;
  }
};

CoglobularMap delta(int n, int max_dim);
CoglobularMap kappa(int n, int max_dim);

/// Validates delta/kappa as pointed-collection morphisms, pointing
/// preservation, and the coglobular identities on every generator for
/// 0 <= n <= n_max.
Report check_coglobular(int n_max, int max_dim);

}  // namespace globop
