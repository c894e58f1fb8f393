#pragma once

#include "globop/algebra.hpp"

namespace globop {

/// A strict T_{B^n}-algebra (n <= 2) on the free category generated by the
/// chain w0 -> w1 -> w2 -> w3, doubled over the two colors, with identity
/// 2-cells and degenerate 3-cells. F and H are the prime-renaming functor,
/// tau the identity transformation; every contraction fills a diagonal pair
/// with the corresponding identity cell.
std::shared_ptr<const Algebra> make_strict_chain(int level, int max_dim = 3);

}  // namespace globop
