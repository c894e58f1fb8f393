#pragma once

#include <memory>
#include <optional>

#include "globop/enumerate.hpp"
#include "globop/term.hpp"

namespace globop {

/// Raised when an algebra's interpretation or contraction oracle has no
/// entry for a requested input.
struct AlgebraGap : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ACell = std::string;
using APasting = Diagram<ACell>;

/// A T_{B^n}-algebra presented by structural evaluation: generator
/// interpretations plus a contraction oracle, over a bicolored globular set
/// whose cells are canonical strings.
class Algebra {
 public:
  virtual ~Algebra() = default;

  virtual int level() const = 0;  // n
  virtual const Collection& collection() const = 0;
  virtual int max_dim() const = 0;
  virtual int declared_dim() const = 0;

  virtual int color(int dim, const ACell& c) const = 0;
  virtual ACell src(int dim, const ACell& c) const = 0;
  virtual ACell tgt(int dim, const ACell& c) const = 0;
  /// Bounded, deterministic seed enumeration used by the check suites.
  virtual std::vector<ACell> cells(int dim) const = 0;

  virtual ACell interp(const Generator& g, const APasting& pasting) const = 0;
  virtual ACell fill(const ACell& lo, const ACell& hi, int level) const = 0;
  /// For cells above declared_dim: the cell they degenerate, if any.
  virtual std::optional<ACell> degeneracy_base(int dim, const ACell& c) const = 0;
};

ACell boundary_cell(const Algebra& a, int dim, const ACell& c, int k, Side side);
APasting algebra_globe(const Algebra& a, int cell_dim, const ACell& c, int to_dim);

/// nu: structural evaluation of an operad term on a labelled pasting.
ACell evaluate(const Algebra& a, const APasting& pi, const Term& b);

/// The same recursion on raw (unnormalized) terms; used to test
/// normalization invariance.
ACell evaluate_raw(const Algebra& a, const APasting& pi, const RawTerm& b);

struct MonadCell {
  APasting pi;
  Term b;
};

/// All cells of T_{B^n}(G) at this dimension within the bounds: compatible
/// pairs in deterministic order.
std::vector<MonadCell> monad_cells(const Algebra& a, int dim, int tree_bound,
                                   long long term_size);

struct CheckBounds {
  int tree_bound = 2;
  long long term_size = 4;
  int max_dim = 3;
};

/// Eilenberg-Moore laws, concretely: unit, multiplicativity on two-layer
/// samples, and normalization invariance.
Report check_algebra_axioms(const Algebra& a, const CheckBounds& bounds);

/// sigma / beta: precompose with delta / kappa; at n = 1 also restrict to
/// the matching color.
std::shared_ptr<const Algebra> source_algebra(std::shared_ptr<const Algebra> a);
std::shared_ptr<const Algebra> target_algebra(std::shared_ptr<const Algebra> a);

/// Consistence: nu(delta_n^p(alpha); a) = sigma_p^n(G,nu)(alpha; a) and the
/// kappa/beta twin, on every enumerated level-p cell within bounds.
Report check_consistence(std::shared_ptr<const Algebra> a, int p,
                         const CheckBounds& bounds);

/// The two induced infinity-magmas of an algebra.
struct Magma {
  const Algebra* alg;
  ACell compose2(const ACell& x, const ACell& y, int p, int n) const;
  ACell identity(const ACell& x, int n) const;
};

Magma induced_magma(const Algebra& a);

/// declared_dim consistency: identities of cells at declared_dim and above
/// are degenerate.
Report check_dimension(const Algebra& a);

}  // namespace globop
