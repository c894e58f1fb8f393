#pragma once

#include "globop/term.hpp"

namespace globop {

/// All normal-form cells of B(X) of the given dimension with size at most
/// max_size, each exactly once, ordered by (size, encoding). Level-0
/// brackets can be excluded to match the stricter reading of the free
/// contraction.
std::vector<Term> enumerate_cells(const Collection& coll, int dim,
                                  long long max_size,
                                  bool level0_brackets = true);

/// Every well-typed argument diagram for the given head whose leaf labels
/// are drawn from the supplied pools (indexed by dimension).
std::vector<TermDiagram> enumerate_args(
    const Term& head, const std::vector<std::vector<Term>>& pool_by_dim,
    long long leaf_budget);

}  // namespace globop
