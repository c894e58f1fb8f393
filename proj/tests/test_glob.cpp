#include <doctest.h>

#include "globop/glob.hpp"

using namespace globop;

namespace {

GlobularSet one_point() {
  GlobularSet g(3);
  g.add_cell(0, "x");
  return g;
}

GlobularSet parallel_pair_with_2cell() {
  GlobularSet g(2);
  g.add_cell(0, "x");
  g.add_cell(0, "y");
  g.add_cell(1, "f", "x", "y");
  g.add_cell(2, "alpha", "f", "f");
  return g;
}

}  // namespace

TEST_CASE("a single 0-cell is vacuously globular") {
  CHECK(validate_globular(one_point()).ok());
}

TEST_CASE("one parallel pair with a 2-cell validates") {
  CHECK(validate_globular(parallel_pair_with_2cell()).ok());
}

TEST_CASE("mismatched 2-cell boundaries are reported") {
  GlobularSet g(2);
  g.add_cell(0, "x");
  g.add_cell(0, "y");
  g.add_cell(0, "z");
  g.add_cell(1, "f", "x", "y");
  g.add_cell(1, "g", "x", "z");
  g.add_cell(2, "alpha", "f", "g");
  Report r = validate_globular(g);
  REQUIRE_FALSE(r.ok());
  bool found = false;
  for (const auto& v : r.issues)
    if (v.cell == "alpha" && v.message == "tgt(src)!=tgt(tgt)") found = true;
  CHECK(found);
}

TEST_CASE("constant graphs are detected") {
  GlobularSet g(2);
  g.add_cell(0, "1");
  g.add_cell(1, "1", "1", "1");
  g.add_cell(2, "1", "1", "1");
  CHECK(validate_globular(g).ok());
  CHECK(is_constant(g));
  CHECK_FALSE(is_constant(parallel_pair_with_2cell()));
}

TEST_CASE("color restriction partitions points and is closed under boundaries") {
  GlobularSet base(1);
  base.add_cell(0, "x");
  base.add_cell(0, "y");
  base.add_cell(1, "f", "x", "x");
  ColoredGlobularSet g(base, 2);
  g.set_color(0, "x", 1);
  g.set_color(0, "y", 2);
  g.set_color(1, "f", 1);
  CHECK(validate_colored(g).ok());

  GlobularSet c1 = color_restrict(g, 1);
  CHECK(c1.cells(0) == std::vector<std::string>{"x"});
  CHECK(c1.cells(1) == std::vector<std::string>{"f"});
  CHECK(validate_globular(c1).ok());

  GlobularSet c2 = color_restrict(g, 2);
  CHECK(c2.cells(0) == std::vector<std::string>{"y"});
  CHECK(c2.cells(1).empty());
  CHECK(validate_globular(c2).ok());

  CHECK_THROWS_AS(color_restrict(g, 3), std::invalid_argument);
}

TEST_CASE("identity and collapse maps are morphisms, endpoint swaps are not") {
  GlobularSet g(1);
  g.add_cell(0, "x");
  g.add_cell(0, "y");
  g.add_cell(1, "f", "x", "y");
  g.add_cell(1, "g", "x", "y");

  CHECK(check_morphism(g, g, identity_map(g)));

  GlobularSet h(1);
  h.add_cell(0, "x");
  h.add_cell(0, "y");
  h.add_cell(1, "e", "x", "y");
  CellMap collapse{{{"x", "x"}, {"y", "y"}}, {{"f", "e"}, {"g", "e"}}};
  CHECK(check_morphism(g, h, collapse));

  GlobularSet k(1);
  k.add_cell(0, "x");
  k.add_cell(0, "y");
  k.add_cell(0, "z");
  k.add_cell(1, "e", "x", "z");
  CellMap bad{{{"x", "x"}, {"y", "y"}}, {{"f", "e"}, {"g", "e"}}};
  Report why;
  CHECK_FALSE(check_morphism(g, k, bad, &why));
  CHECK_FALSE(why.ok());
}

TEST_CASE("morphisms compose") {
  GlobularSet g(1);
  g.add_cell(0, "x");
  g.add_cell(0, "y");
  g.add_cell(1, "f", "x", "y");
  CellMap id = identity_map(g);
  CHECK(check_morphism(g, g, compose_maps(id, id)));
}
