#pragma once

#include "globop/algebra.hpp"

namespace globop {

/// A T_{B^1}-algebra of dimension 2 whose 0-cells are finite subsets of
/// {0..max_set-1}, 1-cells spans with canonically encoded apex elements,
/// and 2-cells span maps. Composition is the literal pullback on element
/// pairs, so associators are non-identity; the contraction oracle produces
/// the mediating isomorphisms by flattening apex elements along the chain.
/// F is the identity pseudofunctor between the two color copies.
std::shared_ptr<const Algebra> make_span_algebra(int max_set, int max_dim = 3);

/// Exposed for tests: the canonical flattening of an apex element.
std::vector<std::string> span_flatten_element(const std::string& elt);

}  // namespace globop
