#include <doctest.h>

#include <set>

#include "globop/pasting.hpp"
#include "globop/tgraph.hpp"

using namespace globop;

namespace {

// A small concrete target for labelled diagrams: x --f--> y --g--> z with a
// 2-cell on f.
GlobularSet chain() {
  GlobularSet g(3);
  g.add_cell(0, "x");
  g.add_cell(0, "y");
  g.add_cell(0, "z");
  g.add_cell(1, "f", "x", "y");
  g.add_cell(1, "g", "y", "z");
  g.add_cell(2, "al", "f", "f");
  return g;
}

}  // namespace

TEST_CASE("tree parse/encode round-trips and orders children") {
  for (const char* s : {"()", "(())", "(()())", "((()()))", "(()(()))"}) {
    CHECK(Tree::parse(s).encode() == s);
  }
  CHECK(Tree::linear(0).encode() == "()");
  CHECK(Tree::linear(2).encode() == "((()))");
  CHECK_THROWS(Tree::parse("(()"));
  CHECK_THROWS(Tree::parse("()x"));
}

TEST_CASE("realization of the 1-globe: one 1-cell, two 0-cells") {
  GlobularSet g = realize(Tree::parse("(())"), 1);
  CHECK(g.cells(0).size() == 2);
  CHECK(g.cells(1).size() == 1);
  CHECK(validate_globular(g).ok());
}

TEST_CASE("realization of (()()): two composable 1-cells, three 0-cells") {
  GlobularSet g = realize(Tree::parse("(()())"), 1);
  CHECK(g.cells(0).size() == 3);
  CHECK(g.cells(1).size() == 2);
  CHECK(validate_globular(g).ok());
  // The two 1-cells share the middle 0-cell.
  CHECK(g.tgt(1, "n0:0") == g.src(1, "n1:0"));
}

TEST_CASE("realization of ((()())): two vertically composable 2-cells") {
  GlobularSet g = realize(Tree::parse("((()()))"), 2);
  CHECK(g.cells(0).size() == 2);
  CHECK(g.cells(1).size() == 3);
  CHECK(g.cells(2).size() == 2);
  CHECK(validate_globular(g).ok());
  CHECK(g.tgt(2, "n0.0:0") == g.src(2, "n0.1:0"));
}

TEST_CASE("realize rejects trees above the requested dimension") {
  CHECK_THROWS_AS(realize(Tree::parse("(())"), 0), PastingError);
}

TEST_CASE("realization always validates on a family of trees") {
  for (const char* s :
       {"()", "(())", "(()())", "((()()))", "(()(()))", "((())(()))",
        "(((())))", "(()()())", "((())(()()))"}) {
    Tree t = Tree::parse(s);
    CHECK(validate_globular(realize(t, t.height())).ok());
  }
}

TEST_CASE("globe of a cell labels the boundary tower") {
  GlobularSet g = chain();
  auto d0 = cell_globe(g, 0, "x", 0);
  CHECK(d0.tree == Tree::leaf());
  CHECK(d0.at(Sector{{}, 0}) == "x");

  auto d1 = cell_globe(g, 1, "f", 1);
  CHECK(d1.tree == Tree::parse("(())"));
  CHECK(d1.at(Sector{{}, 0}) == "x");
  CHECK(d1.at(Sector{{}, 1}) == "y");
  CHECK(d1.at(Sector{{0}, 0}) == "f");
  CHECK(validate_diagram(d1, g).ok());
}

TEST_CASE("glue of two 1-globes at p=0 is the grafted tree (()())") {
  GlobularSet g = chain();
  auto f = cell_globe(g, 1, "f", 1);
  auto gg = cell_globe(g, 1, "g", 1);
  auto fg = glue(f, gg, 0);
  CHECK(fg.tree == Tree::parse("(()())"));
  CHECK(validate_diagram(fg, g).ok());
  CHECK(fg.at(Sector{{0}, 0}) == "f");
  CHECK(fg.at(Sector{{1}, 0}) == "g");

  // Wrong order: tgt(g)=z but src(f)=x.
  CHECK_THROWS_AS(glue(gg, f, 0), PastingError);
  // Applicative order swaps the arguments.
  CHECK(star(gg, f, 0, StarOrder::applicative) == fg);
}

TEST_CASE("glue of two 2-globes at p=1 is ((()()))") {
  GlobularSet g = chain();
  auto a = cell_globe(g, 2, "al", 2);
  auto aa = glue(a, a, 1);
  CHECK(aa.tree == Tree::parse("((()()))"));
  CHECK(validate_diagram(aa, g).ok());
}

TEST_CASE("gluing degenerate diagrams stays degenerate") {
  GlobularSet g = chain();
  auto idf = degenerate(cell_globe(g, 1, "f", 1), 2);
  auto a = cell_globe(g, 2, "al", 2);
  auto wh = glue(idf, a, 1);  // 1_f *_1 al = al-shaped
  CHECK(wh.tree == Tree::parse("((()))"));
  auto ii = glue(idf, idf, 1);
  CHECK(ii == idf);
}

TEST_CASE("boundaries: source is leftmost, target rightmost") {
  GlobularSet g = chain();
  auto f = cell_globe(g, 1, "f", 1);
  auto gg = cell_globe(g, 1, "g", 1);
  auto fg = glue(f, gg, 0);
  CHECK(boundary(fg, Side::source, 0).at(Sector{{}, 0}) == "x");
  CHECK(boundary(fg, Side::target, 0).at(Sector{{}, 0}) == "z");
  CHECK(boundary(cell_globe(g, 1, "f", 1), Side::source, 0) ==
        cell_globe(g, 0, "x", 0));
  CHECK_THROWS_AS(boundary(fg, Side::source, 1), PastingError);
}

TEST_CASE("boundary of a degeneracy is the cell itself") {
  GlobularSet g = chain();
  auto f = cell_globe(g, 1, "f", 1);
  auto idf = degenerate(f, 2);
  CHECK(boundary(idf, Side::source, 1) == f);
  CHECK(boundary(idf, Side::target, 1) == f);
  CHECK(degenerate(f, 1) == f);
  CHECK_THROWS_AS(degenerate(idf, 1), PastingError);
}

TEST_CASE("boundary of a glue at p is the shared p-boundary") {
  GlobularSet g = chain();
  auto f = cell_globe(g, 1, "f", 1);
  auto gg = cell_globe(g, 1, "g", 1);
  auto fg = glue(f, gg, 0);
  CHECK(boundary(fg, Side::source, 0) == boundary(f, Side::source, 0));
  auto shared = boundary(f, Side::target, 0);
  CHECK(shared == boundary(gg, Side::source, 0));
}

TEST_CASE("glue is associative where defined") {
  GlobularSet g(1);
  g.add_cell(0, "p0");
  g.add_cell(0, "p1");
  g.add_cell(0, "p2");
  g.add_cell(0, "p3");
  g.add_cell(1, "e1", "p0", "p1");
  g.add_cell(1, "e2", "p1", "p2");
  g.add_cell(1, "e3", "p2", "p3");
  auto e1 = cell_globe(g, 1, "e1", 1);
  auto e2 = cell_globe(g, 1, "e2", 1);
  auto e3 = cell_globe(g, 1, "e3", 1);
  CHECK(glue(glue(e1, e2, 0), e3, 0) == glue(e1, glue(e2, e3, 0), 0));
}

namespace {

using D1 = Diagram<std::string>;
using D2 = Diagram<D1>;

// eta at the level of T(G): wrap each label in its globe.
D2 eta_wrap(const D1& pi, const GlobularSet& g) {
  return map_labels<std::string, D1>(pi, [&](const Sector& s, const std::string& c) {
    return cell_globe(g, s.level(), c, s.level());
  });
}

}  // namespace

TEST_CASE("flatten unit laws") {
  GlobularSet g = chain();
  auto f = cell_globe(g, 1, "f", 1);
  auto gg = cell_globe(g, 1, "g", 1);
  auto fg = glue(f, gg, 0);
  auto a = cell_globe(g, 2, "al", 2);

  for (const D1& pi : {fg, f, a, degenerate(fg, 2), glue(degenerate(f, 2), a, 1)}) {
    // mu(T(eta)(pi)) = pi
    CHECK(flatten(eta_wrap(pi, g)).diagram == pi);
    // mu(eta_T(pi)) = pi: the globe of pi in T(T(G)).
    D2 outer = globe<D1>(
        pi, pi.dim, pi.dim,
        [](const D1& d, int) { return boundary(d, Side::source, d.dim - 1); },
        [](const D1& d, int) { return boundary(d, Side::target, d.dim - 1); });
    CHECK(flatten(outer).diagram == pi);
  }
}

TEST_CASE("flatten of a (()()) of chains grafts the trees") {
  GlobularSet g(1);
  g.add_cell(0, "p0");
  g.add_cell(0, "p1");
  g.add_cell(0, "p2");
  g.add_cell(0, "p3");
  g.add_cell(1, "e1", "p0", "p1");
  g.add_cell(1, "e2", "p1", "p2");
  g.add_cell(1, "e3", "p2", "p3");
  auto e1 = cell_globe(g, 1, "e1", 1);
  auto e2 = cell_globe(g, 1, "e2", 1);
  auto e3 = cell_globe(g, 1, "e3", 1);
  auto e12 = glue(e1, e2, 0);

  // Outer (()()) labelled with [e1*e2] then [e3]: flattens to (()()()).
  D2 outer;
  outer.dim = 1;
  outer.tree = Tree::parse("(()())");
  outer.labels[Sector{{}, 0}] = boundary(e12, Side::source, 0);
  outer.labels[Sector{{}, 1}] = boundary(e12, Side::target, 0);
  outer.labels[Sector{{}, 2}] = boundary(e3, Side::target, 0);
  outer.labels[Sector{{0}, 0}] = e12;
  outer.labels[Sector{{1}, 0}] = e3;
  auto flat = flatten(outer);
  CHECK(flat.diagram.tree == Tree::parse("(()()())"));
  CHECK(flat.diagram == glue(e12, e3, 0));
  // Provenance: the second outer 1-sector's top lands on the third position.
  CHECK(flat.prov.at(Sector{{1}, 0}).at(Sector{{0}, 0}) == (Sector{{2}, 0}));
}

TEST_CASE("flatten associativity on nested diagrams up to 6 nodes") {
  GlobularSet g(2);
  g.add_cell(0, "p0");
  g.add_cell(0, "p1");
  g.add_cell(0, "p2");
  g.add_cell(1, "e1", "p0", "p1");
  g.add_cell(1, "e2", "p1", "p2");
  g.add_cell(2, "k1", "e1", "e1");

  CellUniverse u = universe_of(g);
  // Level-1 nesting: diagrams over T(G). Build all small outers whose labels
  // are themselves small diagrams, then check both evaluation orders agree.
  auto smalls1 = enumerate_diagrams(u, 1, 3);
  auto smalls2 = enumerate_diagrams(u, 2, 3);
  std::vector<D1> inners(smalls1.begin(), smalls1.end());
  inners.insert(inners.end(), smalls2.begin(), smalls2.end());

  int checked = 0;
  for (const D1& pi : inners) {
    if (pi.tree.node_count() > 3) continue;
    // Doubly nested: eta-wrap twice, then compare flatten-of-flatten with
    // flatten-of-mapped-flatten.
    D2 once = eta_wrap(pi, g);
    Diagram<D2> twice = map_labels<D1, D2>(
        once, [&](const Sector&, const D1& lbl) { return eta_wrap(lbl, g); });
    auto lhs = flatten(flatten(twice).diagram).diagram;
    auto rhs =
        flatten(map_labels<D2, D1>(twice, [&](const Sector&, const D2& lbl) {
          return flatten(lbl).diagram;
        })).diagram;
    CHECK(lhs == rhs);
    CHECK(lhs == pi);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("map_pasting preserves gluing on small trees") {
  GlobularSet g = chain();
  GlobularSet h(3);
  h.add_cell(0, "w");
  h.add_cell(1, "w", "w", "w");
  h.add_cell(2, "w", "w", "w");
  h.add_cell(3, "w", "w", "w");
  auto to_w = [](int, const std::string&) { return std::string("w"); };
  auto f = cell_globe(g, 1, "f", 1);
  auto gg = cell_globe(g, 1, "g", 1);
  auto glued = glue(f, gg, 0);
  CHECK(map_pasting(glued, to_w) ==
        glue(map_pasting(f, to_w), map_pasting(gg, to_w), 0));
}

TEST_CASE("diagram enumeration over a universe is exhaustive on a known case") {
  GlobularSet g = chain();
  auto d1 = enumerate_diagrams(universe_of(g), 1, 3);
  // Trees: (), (()), (()()). Valid labellings: 3 degenerate points, 2 single
  // edges, 1 composable chain f.g.
  int degen = 0, single = 0, chains = 0;
  for (const auto& d : d1) {
    if (d.tree == Tree::leaf()) ++degen;
    if (d.tree == Tree::parse("(())")) ++single;
    if (d.tree == Tree::parse("(()())")) ++chains;
    CHECK(validate_diagram(d, g).ok());
  }
  CHECK(degen == 3);
  CHECK(single == 2);
  CHECK(chains == 1);
}
