#pragma once

#include <memory>
#include <variant>

#include "globop/collections.hpp"

namespace globop {

struct TermTypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotParallel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Term;
using TermDiagram = Diagram<Term>;

/// A cell of the free contractible colored operad B(X), kept in normal form:
/// a Comp head is never a Comp and never a point unit, and no Comp has the
/// all-unit argument diagram of its head.
class Term {
 public:
  enum class Kind { gen, comp, bracket };

  Term() = default;
  bool valid() const { return node_ != nullptr; }

  Kind kind() const;
  int dim() const;
  const Shape& arity() const;
  int coarity() const;
  Term src() const;
  Term tgt() const;
  Term boundary(Side side, int k) const;  // iterated, normalized
  long long size() const;

  // Kind-specific accessors.
  const Generator& gen() const;
  Term head() const;
  const TermDiagram& args() const;
  Term lo() const;
  Term hi() const;

  bool is_point_unit() const;

  std::string encode() const;

  bool operator==(const Term& o) const;
  std::strong_ordering operator<=>(const Term& o) const;

  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  const Node& node() const { return *node_; }

 private:
  std::shared_ptr<const Node> node_;
};

Term make_gen(const Collection& coll, const std::string& name);

/// Operadic composition gamma, normalized: associativity is flattened into
/// the head and both unit laws are applied.
Term compose(const Term& head, const TermDiagram& args);

/// Contraction bracket [lo, hi]; the pair must be parallel with equal arity
/// and coarity after normalization.
Term make_bracket(const Term& lo, const Term& hi);

Term lift(const CoglobularMap& map, const Collection& target, const Term& t);

/// eta(t) raised to to_dim.
TermDiagram term_globe(const Term& t, int to_dim);

/// The color skeleton T(c) of an argument diagram.
Shape coarity_skeleton(const TermDiagram& args);

/// mu(T(d)(args)): the arity of a composite with these arguments.
FlattenResult<int> arity_flatten(const TermDiagram& args);

/// Raw (not yet normalized) terms, as read from the wire format.
struct RawTerm;
using RawTermPtr = std::shared_ptr<const RawTerm>;
struct RawTerm {
  Term::Kind kind = Term::Kind::gen;
  std::string gen_name;             // gen
  int point_color = 0, point_dim = -1;  // gen via pt:COLOR:DIM sugar
  RawTermPtr head;                  // comp
  int args_dim = 0;                 // comp
  Tree args_tree;                   // comp
  std::vector<RawTermPtr> args_labels;  // comp, canonical sector order
  RawTermPtr lo, hi;                // bracket
};

Term normalize(const RawTerm& raw, const Collection& coll);
RawTermPtr to_raw(const Term& t);

}  // namespace globop
