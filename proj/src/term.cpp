#include "globop/term.hpp"

#include <algorithm>

namespace globop {

struct Term::Node {
  Kind kind;
  int dim = 0;
  Shape arity;
  int coarity = 1;
  long long size = 1;
  Term src, tgt;  // invalid at dim 0

  Generator gen;     // kind == gen
  Term head;         // kind == comp
  TermDiagram args;  // kind == comp
  Term lo, hi;       // kind == bracket
};

Term::Kind Term::kind() const { return node_->kind; }
int Term::dim() const { return node_->dim; }
const Shape& Term::arity() const { return node_->arity; }
int Term::coarity() const { return node_->coarity; }
long long Term::size() const { return node_->size; }

Term Term::src() const {
  if (dim() == 0) throw TermTypeError("dim-0 term has no source");
  return node_->src;
}

Term Term::tgt() const {
  if (dim() == 0) throw TermTypeError("dim-0 term has no target");
  return node_->tgt;
}

Term Term::boundary(Side side, int k) const {
  if (k >= dim()) throw TermTypeError("term boundary above dimension");
  Term cur = *this;
  while (cur.dim() > k) cur = side == Side::source ? cur.src() : cur.tgt();
  return cur;
}

const Generator& Term::gen() const {
  if (kind() != Kind::gen) throw TermTypeError("not a generator term");
  return node_->gen;
}
Term Term::head() const {
  if (kind() != Kind::comp) throw TermTypeError("not a composite term");
  return node_->head;
}
const TermDiagram& Term::args() const {
  if (kind() != Kind::comp) throw TermTypeError("not a composite term");
  return node_->args;
}
Term Term::lo() const {
  if (kind() != Kind::bracket) throw TermTypeError("not a bracket term");
  return node_->lo;
}
Term Term::hi() const {
  if (kind() != Kind::bracket) throw TermTypeError("not a bracket term");
  return node_->hi;
}

bool Term::is_point_unit() const {
  return kind() == Kind::gen && node_->gen.point;
}

std::string Term::encode() const {
  switch (kind()) {
    case Kind::gen:
      return "gen:" + node_->gen.name;
    case Kind::comp: {
      std::string out = "comp(" + node_->head.encode() + ";" +
                        std::to_string(node_->args.dim) + ":" +
                        node_->args.tree.encode() + "{";
      bool first = true;
      for (const auto& [s, l] : node_->args.labels) {
        if (!first) out += ",";
        first = false;
        out += l.encode();
      }
      return out + "})";
    }
    case Kind::bracket:
      return "br(" + node_->lo.encode() + "," + node_->hi.encode() + ")";
  }
  return "?";
}

bool Term::operator==(const Term& o) const { return (*this <=> o) == 0; }

std::strong_ordering Term::operator<=>(const Term& o) const {
  if (node_ == o.node_) return std::strong_ordering::equal;
  if (auto c = dim() <=> o.dim(); c != 0) return c;
  if (auto c = size() <=> o.size(); c != 0) return c;
  if (auto c = kind() <=> o.kind(); c != 0) return c;
  switch (kind()) {
    case Kind::gen:
      return node_->gen.name <=> o.node_->gen.name;
    case Kind::comp: {
      if (auto c = node_->head <=> o.node_->head; c != 0) return c;
      return node_->args <=> o.node_->args;
    }
    case Kind::bracket: {
      if (auto c = node_->lo <=> o.node_->lo; c != 0) return c;
      return node_->hi <=> o.node_->hi;
    }
  }
  return std::strong_ordering::equal;
}

Term make_gen(const Collection& coll, const std::string& name) {
  const Generator* g = coll.find(name);
  if (!g) throw TermTypeError("unknown generator " + name);
  auto node = std::make_shared<Term::Node>();
  node->kind = Term::Kind::gen;
  node->dim = g->dim;
  node->arity = g->arity;
  node->coarity = g->coarity;
  node->size = 1;
  node->gen = *g;
  if (g->dim >= 1) {
    node->src = make_gen(coll, g->src);
    node->tgt = make_gen(coll, g->tgt);
  }
  return Term(std::move(node));
}

Shape coarity_skeleton(const TermDiagram& args) {
  return map_pasting(args, [](int, const Term& t) { return t.coarity(); });
}

FlattenResult<int> arity_flatten(const TermDiagram& args) {
  auto arities = map_pasting(args, [](int, const Term& t) { return t.arity(); });
  return flatten(arities);
}

TermDiagram term_globe(const Term& t, int to_dim) {
  return globe<Term>(
      t, t.dim(), to_dim, [](const Term& x, int) { return x.src(); },
      [](const Term& x, int) { return x.tgt(); });
}

namespace {

/// args equals T(lambda)(d(head)): every label is the point unit of the
/// sector's arity color.
bool args_are_units_of(const Shape& head_arity, const TermDiagram& args) {
  for (const auto& [s, t] : args.labels) {
    if (!t.is_point_unit()) return false;
    if (t.gen().point_color != head_arity.at(s)) return false;
  }
  return true;
}

// Only the labels at leaf sectors are free data; everything else is a
// derived boundary, so term size counts the leaves.
long long leaf_label_size(const TermDiagram& args) {
  long long total = 0;
  for (const auto& [s, t] : args.labels)
    if (args.tree.kid_count(s.node) == 0) total += t.size();
  return total;
}

}  // namespace

Term compose(const Term& head, const TermDiagram& args) {
  if (!head.valid()) throw TermTypeError("compose: invalid head");
  if (args.dim != head.dim())
    throw TermTypeError("compose: argument dimension " + std::to_string(args.dim) +
                        " differs from head dimension " + std::to_string(head.dim()));
  for (const auto& s : sectors_of(args.tree)) {
    auto it = args.labels.find(s);
    if (it == args.labels.end())
      throw TermTypeError("compose: unlabelled sector " + s.to_string());
    if (it->second.dim() != s.level())
      throw TermTypeError("compose: label dimension mismatch at " + s.to_string());
  }
  Shape skel = coarity_skeleton(args);
  if (!(skel == head.arity()))
    throw TermTypeError("compose: argument colors do not match the head arity: " +
                        encode_diagram(skel) + " vs " + encode_diagram(head.arity()) +
                        " for head " + head.encode());

  // Gluing compatibility of the arguments (the pullback lives over T(B)).
  for (const auto& s : sectors_of(args.tree)) {
    if (s.level() == 0) continue;
    const Term& t = args.at(s);
    if (!(args.at(src_sector(s)) == t.src()) || !(args.at(tgt_sector(s)) == t.tgt()))
      throw TermTypeError("compose: arguments do not paste at " + s.to_string());
  }

  if (head.kind() == Term::Kind::comp) {
    // gamma(gamma(b, pi), args) = gamma(b, pi') with each pi-label fed its
    // slice of args.
    const TermDiagram& pi = head.args();
    FlattenResult<int> flat = arity_flatten(pi);
    TermDiagram inner;
    inner.dim = pi.dim;
    inner.tree = pi.tree;
    for (const auto& [s, x] : pi.labels) {
      const auto& prov = flat.prov.at(s);
      TermDiagram slice;
      slice.dim = s.level();
      slice.tree = x.arity().tree;
      for (const auto& [u, target] : prov) slice.labels.emplace(u, args.at(target));
      inner.labels.emplace(s, compose(x, slice));
    }
    return compose(head.head(), inner);
  }

  if (head.is_point_unit()) {
    // Left unit: the argument diagram is a globe; return its top label.
    Sector top{Tree::Addr(args.tree.height(), 0), 0};
    return args.at(top);
  }

  if (args_are_units_of(head.arity(), args)) return head;  // right unit

  auto node = std::make_shared<Term::Node>();
  node->kind = Term::Kind::comp;
  node->dim = head.dim();
  node->arity = arity_flatten(args).diagram;
  node->coarity = head.coarity();
  node->head = head;
  node->args = args;
  node->size = 1 + head.size() + leaf_label_size(args);
  if (node->dim >= 1) {
    node->src = compose(head.src(), boundary(args, Side::source, node->dim - 1));
    node->tgt = compose(head.tgt(), boundary(args, Side::target, node->dim - 1));
  }
  return Term(std::move(node));
}

Term make_bracket(const Term& lo, const Term& hi) {
  if (!lo.valid() || !hi.valid()) throw NotParallel("bracket of invalid term");
  if (lo.dim() != hi.dim())
    throw NotParallel("bracket components have different dimensions");
  int k = lo.dim();
  if (k >= 1) {
    if (!(lo.src() == hi.src()))
      throw NotParallel("sources differ: " + lo.src().encode() + " vs " +
                        hi.src().encode());
    if (!(lo.tgt() == hi.tgt()))
      throw NotParallel("targets differ: " + lo.tgt().encode() + " vs " +
                        hi.tgt().encode());
  }
  if (!(lo.arity() == hi.arity()))
    throw NotParallel("arities differ: " + encode_diagram(lo.arity()) + " vs " +
                      encode_diagram(hi.arity()));
  if (lo.coarity() != hi.coarity()) {
    if (k >= 1)
      throw std::logic_error("equal boundaries and arity but distinct coarities");
    throw NotParallel("coarities differ");
  }
  auto node = std::make_shared<Term::Node>();
  node->kind = Term::Kind::bracket;
  node->dim = k + 1;
  node->arity = degenerate(lo.arity(), k + 1);
  node->coarity = lo.coarity();
  node->lo = lo;
  node->hi = hi;
  node->src = lo;
  node->tgt = hi;
  node->size = 1 + std::max(lo.size(), hi.size());
  return Term(std::move(node));
}

Term lift(const CoglobularMap& map, const Collection& target, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::gen:
      return make_gen(target, map(t.gen().name));
    case Term::Kind::comp: {
      TermDiagram args;
      args.dim = t.args().dim;
      args.tree = t.args().tree;
      for (const auto& [s, l] : t.args().labels)
        args.labels.emplace(s, lift(map, target, l));
      Term out = compose(lift(map, target, t.head()), args);
      if (out.kind() != Term::Kind::comp)
        throw std::logic_error("lift collapsed a normal composite");
      return out;
    }
    case Term::Kind::bracket:
      return make_bracket(lift(map, target, t.lo()), lift(map, target, t.hi()));
  }
  throw TermTypeError("lift: unreachable");
}

Term normalize(const RawTerm& raw, const Collection& coll) {
  switch (raw.kind) {
    case Term::Kind::gen: {
      if (raw.point_dim >= 0)
        return make_gen(coll, coll.point(raw.point_color, raw.point_dim).name);
      return make_gen(coll, raw.gen_name);
    }
    case Term::Kind::comp: {
      Term head = normalize(*raw.head, coll);
      TermDiagram args;
      args.dim = raw.args_dim;
      args.tree = raw.args_tree;
      auto sectors = sectors_of(raw.args_tree);
      if (sectors.size() != raw.args_labels.size())
        throw TermTypeError("argument label count does not match the tree");
      for (size_t i = 0; i < sectors.size(); ++i)
        args.labels.emplace(sectors[i], normalize(*raw.args_labels[i], coll));
      return compose(head, args);
    }
    case Term::Kind::bracket:
      return make_bracket(normalize(*raw.lo, coll), normalize(*raw.hi, coll));
  }
  throw TermTypeError("normalize: unreachable");
}

RawTermPtr to_raw(const Term& t) {
  auto out = std::make_shared<RawTerm>();
  out->kind = t.kind();
  switch (t.kind()) {
    case Term::Kind::gen:
      out->gen_name = t.gen().name;
      break;
    case Term::Kind::comp: {
      out->head = to_raw(t.head());
      out->args_dim = t.args().dim;
      out->args_tree = t.args().tree;
      for (const auto& [s, l] : t.args().labels) out->args_labels.push_back(to_raw(l));
      break;
    }
    case Term::Kind::bracket:
      out->lo = to_raw(t.lo());
      out->hi = to_raw(t.hi());
      break;
  }
  return out;
}

}  // namespace globop
