#include <doctest.h>

#include "cubikit/cubical_set.hpp"
#include "cubikit/fixtures.hpp"

using namespace cubikit;

namespace {

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("standard cube has binom(n,k) 2^(n-k) k-cells and validates") {
  for (int n = 0; n <= 4; ++n) {
    auto c = standard_cube(n);
    for (int k = 0; k <= n; ++k) CHECK(c.size(k) == binom(n, k) * (1L << (n - k)));
    CHECK(validate(c).empty());
  }
}

TEST_CASE("every single-entry face perturbation of the 3-cube is caught") {
  const auto base = standard_cube(3);
  int tried = 0;
  for (int k = 1; k <= 3; ++k)
    for (int j = 1; j <= k; ++j)
      for (Sign s : {Sign::Minus, Sign::Plus})
        for (int x = 0; x < base.size(k); ++x)
          for (int y = 0; y < base.size(k - 1); ++y) {
            if (y == base.face(k, j, s, x)) continue;
            auto bad = base;
            bad.set_face(k, j, s, x, y);
            ++tried;
            CHECK_FALSE(validate(bad).empty());
          }
  CHECK(tried > 0);
}

TEST_CASE("partial tables are flagged only when totality is required") {
  auto x = fixtures::p3();
  TruncatedCubicalSet y(1, Variant::Plain);
  for (int c = 0; c < x.size(0); ++c) y.add_cell(0, x.label(0, c));
  y.add_cell(1, "f");
  y.set_face(1, 1, Sign::Minus, 0, 0);
  CHECK_FALSE(check_tables(y, true).empty());
  CHECK(check_tables(y, false).empty());
  CHECK(validate(y, false).empty());
}

TEST_CASE("act follows the word, innermost generator first") {
  auto c = standard_cube(2);
  const int sq = c.find(2, "**");
  auto w = Word::of({Generator::face(Sign::Minus, 1, 1), Generator::face(Sign::Plus, 2, 2)});
  CHECK(c.label(0, act(c, w, sq)) == "-+");
  CHECK(act(c, Word::identity(2), sq) == sq);
  CHECK_THROWS_AS(act(c, Word::of({Generator::degeneracy(3, 1)}), sq), CapabilityError);
  CHECK_THROWS_AS(act(c, w, 99), InputError);
}

TEST_CASE("free reflexive interval counts raising maps") {
  // Semireflexive: raising maps k -> d are the C(k,d) coordinate projections.
  auto semi = free_reflexive(fixtures::interval(), 2, Variant::Semireflexive);
  CHECK(semi.size(0) == 2);
  CHECK(semi.size(1) == 3);
  CHECK(semi.size(2) == 4);
  CHECK(validate(semi).empty());
  // Reflexive adds max and min: four maps 2 -> 1.
  auto refl = free_reflexive(fixtures::interval(), 2, Variant::Reflexive);
  CHECK(refl.size(2) == 6);
  CHECK(validate(refl).empty());
  auto cube3 = free_reflexive(fixtures::interval(), 3, Variant::Reflexive);
  CHECK(validate(cube3).empty());
  CHECK(refl.find(2, "e{2,1}(f)") != kUndefined);
}

TEST_CASE("free reflexive sets from the 2-cube validate") {
  for (Variant v : {Variant::Semireflexive, Variant::Reflexive}) {
    auto x = free_reflexive(standard_cube(2), 3, v);
    CHECK(validate(x).empty());
  }
}

TEST_CASE("dimension reports") {
  auto pt = fixtures::point(3);
  auto rp = dimension_report(pt);
  CHECK(rp.p == 0);
  CHECK(rp.p_reflexions == 0);
  CHECK_FALSE(rp.saturated);

  auto refl = free_reflexive(fixtures::interval(), 2, Variant::Reflexive);
  auto rr = dimension_report(refl);
  CHECK(rr.p == 1);
  CHECK(rr.p_reflexions == 2);
  REQUIRE(rr.p_connections.has_value());

  auto semi = free_reflexive(fixtures::interval(), 3, Variant::Semireflexive);
  auto rs = dimension_report(semi);
  CHECK(rs.p == 1);
  CHECK_FALSE(rs.p_connections.has_value());

  CHECK_THROWS_AS(dimension_report(standard_cube(2)), CapabilityError);
}

TEST_CASE("builtin fixtures validate") {
  for (const auto& name : fixtures::builtin_names()) {
    CAPTURE(name);
    CHECK(validate(fixtures::builtin(name)).empty());
  }
  auto g = fixtures::grid2x2();
  CHECK(g.size(0) == 9);
  CHECK(g.size(1) == 12);
  CHECK(g.size(2) == 4);
  CHECK_THROWS_AS(fixtures::builtin("nope"), InputError);
}
