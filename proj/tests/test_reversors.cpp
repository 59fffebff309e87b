#include <doctest.h>

#include "cubikit/fixtures.hpp"
#include "cubikit/reversors.hpp"

using namespace cubikit;

namespace {

bool mentions(const Report& r, const std::string& text) {
  for (const auto& v : r)
    if (v.detail.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("integer loop reversors have the right shape and invert") {
  for (int n = 1; n <= 4; ++n) {
    auto c = fixtures::integer_loop(n);
    REQUIRE(c.reversors);
    CHECK(check_reversor_shape(c.cells, *c.reversors).empty());
    CHECK(check_strict_inverses(c, *c.reversors, 0).empty());
  }
}

TEST_CASE("every single reversor entry corruption of the integer loop is detected") {
  const auto base = fixtures::integer_loop(3);
  int tried = 0;
  for (int k = 1; k <= 2; ++k)
    for (int j = 1; j <= k; ++j)
      for (int a = 0; a < base.cells.size(k); ++a)
        for (int v = 0; v < base.cells.size(k); ++v) {
          if (v == base.reversors->maps[k][j - 1][a]) continue;
          auto bad = base;
          bad.reversors->maps[k][j - 1][a] = v;
          ++tried;
          const bool shape = !check_reversor_shape(bad.cells, *bad.reversors).empty();
          const bool inverse = !check_strict_inverses(bad, *bad.reversors, 0).empty();
          CHECK((shape || inverse));
        }
  CHECK(tried == 3 * 2 + 2 * 27 * 26);
}

TEST_CASE("rewiring the inverse of 1 to 1 breaks the inverse law") {
  auto c = fixtures::integer_loop(3);
  c.reversors->maps[1][0][1] = 1;
  CHECK(check_reversor_shape(c.cells, *c.reversors).empty());  // one object
  CHECK_FALSE(check_strict_inverses(c, *c.reversors, 0).empty());
}

TEST_CASE("thresholds at or above the truncation are vacuous") {
  auto c = fixtures::integer_loop(3);
  ReversorTable r;
  r.m = 2;
  CHECK(check_reversor_shape(c.cells, r).empty());
  CHECK(check_strict_inverses(c, r, 2).empty());
}

TEST_CASE("interval with a formal inverse") {
  auto c = fixtures::interval_with_inverse();
  CHECK(validate(c.cells).empty());
  CHECK(check_strict_axioms(c).empty());
  CHECK(check_reversor_shape(c.cells, *c.reversors).empty());
  CHECK(check_strict_inverses(c, *c.reversors, 0).empty());

  auto id = *c.reversors;
  const int f = c.cells.find(1, "f");
  id.maps[1][0][f] = f;
  const auto r = check_reversor_shape(c.cells, id);
  CHECK_FALSE(r.empty());
  CHECK(mentions(r, "R f"));
  CHECK_FALSE(mentions(r, "R 1a"));

  StructureDeclaration minimal;
  CHECK(check_structure_declaration(c.cells, *c.reversors, minimal) ==
        check_reversor_shape(c.cells, *c.reversors));
  CHECK(check_structure_declaration(c.cells, id, minimal) == check_reversor_shape(c.cells, id));
}

TEST_CASE("missing composites raise out-of-universe") {
  auto c = fixtures::interval_with_inverse();
  c.comp[1][0].erase({c.cells.find(1, "f"), c.cells.find(1, "fbar")});
  CHECK_THROWS_AS(check_strict_inverses(c, *c.reversors, 0), OutOfUniverse);
  CHECK_THROWS_AS(check_strict_inverses(StrictInstance(fixtures::p3()), ReversorTable{}, 0),
                  CapabilityError);
}

TEST_CASE("inverses are unique") {
  for (const char* name : {"integer-loop", "s3", "interval-inverse"}) {
    CAPTURE(name);
    auto c = fixtures::builtin_instance(name);
    for (int k = 1; k <= c.truncation(); ++k)
      for (int j = 1; j <= k; ++j)
        for (int a = 0; a < c.cells.size(k); ++a) {
          const auto inv = two_sided_inverses(c, k, j, a);
          REQUIRE(inv.size() == 1);
          CHECK(inv.front() == c.reversors->apply(k, j, a));
        }
  }
}

TEST_CASE("S3 inverses") {
  auto c = fixtures::symmetric_group3();
  CHECK(check_strict_axioms(c).empty());
  CHECK(check_strict_inverses(c, *c.reversors, 0).empty());
}

TEST_CASE("maximal structures") {
  StructureDeclaration maximal{StructureDeclaration::Kind::Maximal, 0, {}};
  auto c = fixtures::integer_loop_maximal(3);
  CHECK(check_structure_declaration(c.cells, *c.reversors, maximal).empty());
  // Negating every edge is not a (2,j)-reversor.
  CHECK_FALSE(check_reversor_shape(c.cells, *c.reversors).empty());

  // Everything degenerate on a point: identity reversors satisfy all squares.
  auto pt = fixtures::point(3);
  ReversorTable id;
  id.maps.resize(4);
  for (int k = 1; k <= 3; ++k) id.maps[k].assign(k, std::vector<int>{0});
  CHECK(check_structure_declaration(pt, id, maximal).empty());

  auto bad = c;
  const int x = bad.cells.find(2, "[1,2,0,1]");
  bad.reversors->maps[2][0][x] = x;
  const auto r = check_structure_declaration(bad.cells, *bad.reversors, maximal);
  REQUIRE_FALSE(r.empty());
  CHECK(r.front().rule == "structure square");
  CHECK(mentions(r, "k=2, i_k=1"));
  CHECK_FALSE(mentions(r, "i_k=2"));
}

TEST_CASE("general structures check only the declared chains") {
  using Kind = StructureDeclaration::Kind;
  auto loop = fixtures::integer_loop(3);
  auto maxi = fixtures::integer_loop_maximal(3);
  // p = k-1 recovers the minimal triangles.
  StructureDeclaration minimal_chains{Kind::General, 0, {{1, 0, {1}}, {2, 1, {1}}, {2, 1, {2}}}};
  CHECK(check_structure_declaration(loop.cells, *loop.reversors, minimal_chains).empty());
  CHECK_FALSE(check_structure_declaration(maxi.cells, *maxi.reversors, minimal_chains).empty());
  // p = m with every index chain recovers the maximal structure.
  StructureDeclaration maximal_chains{Kind::General, 0, {}};
  for (int i1 = 1; i1 <= 1; ++i1)
    for (int i2 = 1; i2 <= 2; ++i2) maximal_chains.chains.push_back({2, 0, {i1, i2}});
  CHECK(check_structure_declaration(maxi.cells, *maxi.reversors, maximal_chains).empty());

  StructureDeclaration broken{Kind::General, 0, {{2, 0, {1, 3}}}};
  CHECK_FALSE(check_structure_declaration(maxi.cells, *maxi.reversors, broken).empty());
  StructureDeclaration wrong_m{Kind::General, 1, {}};
  CHECK_FALSE(check_structure_declaration(maxi.cells, *maxi.reversors, wrong_m).empty());
}

TEST_CASE("free strict groupoid on the interval satisfies the inverse laws") {
  auto q = free_strict(std::make_shared<const TruncatedCubicalSet>(fixtures::interval()),
                       {.max_dim = 1, .depth = 4, .reversors = true});
  REQUIRE(q.tables.reversors);
  CHECK(check_reversor_shape(q.tables.cells, *q.tables.reversors).empty());
  CHECK(check_strict_inverses(q, *q.tables.reversors, 0).empty());
}
