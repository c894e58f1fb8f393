#pragma once

#include "globop/enumerate.hpp"
#include "globop/term.hpp"

namespace globop {

/// H'(P): the free contractible T-graph on P, built level by level with
/// formal bracket cells over every parallel pair. fill_from_level = 1 is the
/// literal construction (P-tilde(1) = P(1)); fill_from_level = 0 also fills
/// dimension-0 pairs, matching the free operad's term model.
struct FreeContraction {
  TGraph graph;
  ContractionData brackets;
};

FreeContraction free_contraction(const TGraph& p, int fill_from_level = 0);

std::string bracket_cell_name(const std::string& lo, const std::string& hi);

/// T-graph morphism over a fixed arity graph: carrier morphism commuting
/// with d and c.
bool check_tgraph_morphism(const TGraph& p, const TGraph& q, const CellMap& f,
                           Report* why = nullptr);

/// The unique contraction-preserving extension of f through the canonical
/// embedding of P into H'(P): identity on P, brackets to brackets.
CellMap extend_contraction(const FreeContraction& fp, const TGraph& p,
                           const TGraph& q, const ContractionData& kq,
                           const CellMap& f);

bool preserves_contraction(const TGraph& g1, const ContractionData& k1,
                           const ContractionData& k2, const CellMap& g);

/// The alternating free-monoid / free-contraction chain, run on terms:
/// layer L closes under composition, layer C under brackets, both within
/// the size bound. layers = 0 returns the generators.
std::vector<Term> fusion_oracle(const Collection& x, int layers,
                                long long max_size,
                                bool level0_brackets = true);

/// The graded free-monoid construction with literal dimensionwise
/// coequalizers: X_0 = I, X_1 = X, q_{n+1} = coker(y_n^0, y_n^1), and the
/// maps l_n, q_n. Carrier cells of the quotients are canonical class
/// representatives.
struct MonoidLayers {
  PointedTGraph x;
  std::vector<TGraph> layer;            // X_0 .. X_steps
  std::vector<TensorTGraph> q_domain;   // X (x) X_k, the domain of q_k
  std::vector<CellMap> l;               // l_k : X_k -> X_{k+1}
  std::vector<CellMap> q;               // q_k : X (x) X_k -> X_{k+1}
  // For k >= 2: per dimension, class representative -> members.
  std::vector<std::vector<std::map<std::string, std::vector<std::string>>>> classes;
};

MonoidLayers free_monoid_layer(const PointedTGraph& x, int steps, int node_bound);

}  // namespace globop
