#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "globop/pasting.hpp"

namespace globop {

/// A color globe: the arity of a unary symbol.
Shape color_globe(int color, int dim);

/// A span T(G) <- C -> G whose arity graph G is an n-fold coproduct of
/// points; d assigns each carrier cell a pasting diagram over the colors and
/// c a single color.
struct TGraph {
  int n_colors = 1;
  GlobularSet carrier;
  std::vector<std::map<std::string, Shape>> arity;
  std::vector<std::map<std::string, int>> coarity;

  explicit TGraph(int n_colors, int max_dim)
      : n_colors(n_colors),
        carrier(max_dim),
        arity(max_dim + 1),
        coarity(max_dim + 1) {}
  TGraph() : TGraph(1, 0) {}

  int max_dim() const { return carrier.max_dim(); }
  const Shape& d(int dim, const std::string& cell) const;
  int c(int dim, const std::string& cell) const;

  void add(int dim, const std::string& name, Shape arity, int coarity);
  void add(int dim, const std::string& name, const std::string& src,
           const std::string& tgt, Shape arity, int coarity);
};

/// Pointing: for each color and dimension, the unit cell over that color
/// globe, with dp = eta and cp = id.
struct PointedTGraph {
  TGraph base;
  std::vector<std::vector<std::string>> point;  // point[dim][color-1]

  const std::string& p(int color, int dim) const { return point.at(dim).at(color - 1); }
};

Report validate_tgraph(const TGraph& g);
Report validate_pointed(const PointedTGraph& g);

/// The parallel-pair set D_k. Source/target equality is vacuous at k = 0;
/// coarity equality is part of membership at k = 0 and is asserted (hard
/// error on failure) for k >= 1, where it is forced for collections.
std::vector<std::pair<std::string, std::string>> parallel_pairs(const TGraph& g, int k);

/// Contraction brackets, stored per level: brackets[k] fills D_k with
/// (k+1)-cells.
struct ContractionData {
  std::vector<std::map<std::pair<std::string, std::string>, std::string>> brackets;

  explicit ContractionData(int max_dim) : brackets(max_dim + 1) {}
  ContractionData() = default;
};

/// Checks the bracket laws on every assigned pair and totality on D_k for
/// 1 <= k < max_dim. Level-0 brackets are validated when present but never
/// required.
Report validate_contraction(const TGraph& g, const ContractionData& k);

PointedTGraph unit_tgraph(int n_colors, int max_dim);

/// Bounded enumeration of pasting diagrams over a cell universe.
struct CellUniverse {
  int max_dim = 0;
  std::function<std::vector<std::string>(int)> cells;
  std::function<std::string(int, const std::string&)> src, tgt;
};

CellUniverse universe_of(const GlobularSet& g);

std::vector<Diagram<std::string>> enumerate_diagrams(const CellUniverse& u,
                                                     int dim, int max_nodes);

/// The tensor A (x) B, enumerated up to a tree-node bound on the T(A) side.
/// Carrier cells are canonical pair encodings.
struct TensorTGraph {
  TGraph graph;
  std::map<std::string, std::pair<Diagram<std::string>, std::string>> pairs;

  static std::string encode(const Diagram<std::string>& pi, const std::string& y);
};

TensorTGraph tensor(const TGraph& a, const TGraph& b, int node_bound);
TensorTGraph pointed_tensor(const PointedTGraph& a, const PointedTGraph& b,
                            int node_bound, PointedTGraph* pointed_out = nullptr);

}  // namespace globop
