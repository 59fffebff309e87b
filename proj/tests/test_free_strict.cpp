#include <doctest.h>

#include <array>
#include <map>
#include <set>

#include "cubikit/fixtures.hpp"
#include "cubikit/free_strict.hpp"

using namespace cubikit;

namespace {

std::shared_ptr<const TruncatedCubicalSet> shared(TruncatedCubicalSet x) {
  return std::make_shared<const TruncatedCubicalSet>(std::move(x));
}

// Endpoints of a 1-dimensional term over a path graph, computed by walking
// the syntax tree directly.
std::pair<int, int> endpoints(const TermStore& st, TermId t) {
  const auto& n = st.node(t);
  switch (n.kind) {
    case TermKind::Gen:
      return {st.base().face(1, 1, Sign::Minus, n.index),
              st.base().face(1, 1, Sign::Plus, n.index)};
    case TermKind::Degen:
      return {st.node(n.a).index, st.node(n.a).index};
    case TermKind::Comp:
      return {endpoints(st, n.a).first, endpoints(st, n.b).second};
    case TermKind::Rev: {
      auto [s, e] = endpoints(st, n.a);
      return {e, s};
    }
    default:
      FAIL("unexpected constructor in dimension 1");
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("terms print and parse") {
  auto st = std::make_shared<TermStore>(shared(fixtures::p3()));
  const TermId f = st->gen(1, st->base().find(1, "f"));
  const TermId g = st->gen(1, st->base().find(1, "g"));
  const TermId fg = st->comp(1, f, g);
  CHECK(st->parse(st->print(fg)) == fg);
  CHECK(st->parse(" comp{1,1}( gen(f) , gen(g) ) ") == fg);
  CHECK(st->well_formed(fg));
  CHECK_FALSE(st->well_formed(st->comp(1, g, f)));
  CHECK(st->bracket(1, f, f) == st->degen(1, f));
  CHECK(st->bracket_conn(Sign::Plus, 1, f, f) == st->conn(Sign::Plus, 1, f));
  CHECK_THROWS_AS(st->parse("gen(zz)"), ParseError);
  CHECK_THROWS_AS(st->parse("comp{1,1}(gen(f)"), ParseError);
}

TEST_CASE("free strict category on P3: classes are paths") {
  auto q = free_strict(shared(fixtures::p3()), {.max_dim = 1, .depth = 4});
  CHECK(q.class_count(0) == 4);
  // Paths i -> j with i <= j in a 4-vertex line.
  CHECK(q.class_count(1) == 10);
  CHECK(q.class_count() == 14);
  CHECK(check_strict_axioms(q.tables).empty());

  auto& st = *q.store;
  std::map<std::pair<int, int>, std::set<std::pair<int, int>>> by_endpoints;
  for (TermId t : q.universe) {
    if (st.dim(t) != 1) continue;
    by_endpoints[endpoints(st, t)].insert(q.class_of(t));
  }
  CHECK(by_endpoints.size() == 10);
  for (const auto& [ends, classes] : by_endpoints) CHECK(classes.size() == 1);

  const TermId x = st.parse("comp{1,1}(gen(f),comp{1,1}(gen(g),gen(h)))");
  const TermId y = st.parse("comp{1,1}(comp{1,1}(gen(f),gen(g)),gen(h))");
  CHECK(q.decide_equal(x, y));
  CHECK_FALSE(q.decide_equal(x, st.parse("gen(f)")));
}

TEST_CASE("the universe is closed under faces") {
  auto q = free_strict(shared(fixtures::interval()), {.max_dim = 2, .depth = 2});
  auto& st = *q.store;
  for (TermId t : q.universe) {
    for (int i = 1; i <= st.dim(t); ++i)
      for (Sign s : {Sign::Minus, Sign::Plus}) CHECK(q.contains(st.face(t, s, i)));
  }
  CHECK(check_strict_axioms(q.tables).empty());
}

TEST_CASE("squares over a path are determined by their boundary") {
  // The free strict cubical category with connections on a poset has only
  // thin squares, so two 2-terms agree exactly when their faces do.
  struct Case {
    const char* name;
    int depth;
  };
  for (Case c : {Case{"interval", 5}, Case{"p3", 4}}) {
    CAPTURE(c.name);
    auto q = free_strict(shared(fixtures::builtin(c.name)), {.max_dim = 2, .depth = c.depth});
    auto& st = *q.store;
    std::map<std::array<std::pair<int, int>, 4>, std::set<std::pair<int, int>>> by_boundary;
    for (TermId t : q.universe) {
      if (st.dim(t) != 2) continue;
      std::array<std::pair<int, int>, 4> b{
          q.class_of(st.face(t, Sign::Minus, 1)), q.class_of(st.face(t, Sign::Plus, 1)),
          q.class_of(st.face(t, Sign::Minus, 2)), q.class_of(st.face(t, Sign::Plus, 2))};
      by_boundary[b].insert(q.class_of(t));
    }
    CHECK(by_boundary.size() == q.class_count(2));
    for (const auto& [b, classes] : by_boundary) CHECK(classes.size() == 1);
    CHECK(check_strict_axioms(q.tables).empty());
  }
}

TEST_CASE("reversors invert 1-cells") {
  auto q = free_strict(shared(fixtures::interval()),
                       {.max_dim = 1, .depth = 4, .reversors = true});
  // 1_a, 1_b, f and its inverse.
  CHECK(q.class_count(1) == 4);
  auto& st = *q.store;
  CHECK(q.decide_equal(st.parse("comp{1,1}(gen(f),rev{1}(gen(f)))"), st.parse("deg{1}(gen(a))")));
  REQUIRE(q.tables.reversors.has_value());
  CHECK(check_strict_axioms(q.tables).empty());
}

TEST_CASE("terms outside the universe are reported") {
  auto q = free_strict(shared(fixtures::p3()), {.max_dim = 1, .depth = 2});
  auto& st = *q.store;
  const TermId deep = st.parse("comp{1,1}(gen(f),comp{1,1}(gen(g),gen(h)))");
  CHECK_THROWS_AS(q.class_of(deep), OutOfUniverse);
}

TEST_CASE("path counts are stable under a depth bump") {
  auto q5 = free_strict(shared(fixtures::p3()), {.max_dim = 1, .depth = 5});
  CHECK(q5.class_count(1) == 10);
  CHECK(check_strict_axioms(q5.tables).empty());
}

TEST_CASE("a point has only its identity in dimension 1") {
  auto q = free_strict(shared(fixtures::point(0)), {.max_dim = 1, .depth = 3});
  CHECK(q.class_count(1) == 1);
}

TEST_CASE("faces of a degenerate interval square") {
  auto q = free_strict(shared(fixtures::interval()), {.max_dim = 2, .depth = 3});
  auto& st = *q.store;
  const TermId f = st.parse("gen(f)");
  const TermId sq = st.degen(1, f);
  CHECK(st.face(sq, Sign::Minus, 1) == f);
  CHECK(st.face(sq, Sign::Plus, 1) == f);
  CHECK(st.face(sq, Sign::Minus, 2) == st.parse("deg{1}(gen(a))"));
  CHECK(st.face(sq, Sign::Plus, 2) == st.parse("deg{1}(gen(b))"));
  // Conn(-, 1, f) has target faces on the identity of t(f).
  const TermId c = st.conn(Sign::Minus, 1, f);
  CHECK(st.face(c, Sign::Plus, 1) == st.parse("deg{1}(gen(b))"));
}

TEST_CASE("interchange on the 2x2 grid") {
  auto q = free_strict(shared(fixtures::grid2x2()), {.max_dim = 2, .depth = 3});
  auto& st = *q.store;
  const TermId lhs = st.parse(
      "comp{2,2}(comp{2,1}(gen(x0*y0),gen(x1*y0)),comp{2,1}(gen(x0*y1),gen(x1*y1)))");
  const TermId rhs = st.parse(
      "comp{2,1}(comp{2,2}(gen(x0*y0),gen(x0*y1)),comp{2,2}(gen(x1*y0),gen(x1*y1)))");
  CHECK(st.well_formed(lhs));
  CHECK(st.well_formed(rhs));
  CHECK(q.decide_equal(lhs, rhs));
  CHECK(check_strict_axioms(q.tables).empty());
}

namespace {

// Transport matrix for a connection of a ∘_j b, and both ways of reading it.
struct Matrix {
  TermId a, b, c, d;
};

Matrix transport_matrix(TermStore& st, Sign g, int j, TermId x, TermId y) {
  if (g == Sign::Plus) return {st.conn(g, j, x), st.degen(j, x), st.degen(j + 1, x), st.conn(g, j, y)};
  return {st.conn(g, j, x), st.degen(j + 1, y), st.degen(j, y), st.conn(g, j, y)};
}

}  // namespace

TEST_CASE("transport laws hold for every composable pair") {
  for (const char* name : {"interval", "p3"}) {
    CAPTURE(name);
    auto q = free_strict(shared(fixtures::builtin(name)), {.max_dim = 2, .depth = 5});
    auto& st = *q.store;
    int checked = 0;
    int alternative = 0;
    const std::vector<TermId> universe = q.universe;
    for (TermId t : universe) {
      const auto& n = st.node(t);
      if (n.kind != TermKind::Comp || n.dim != 1) continue;
      for (Sign g : {Sign::Minus, Sign::Plus}) {
        const TermId lhs = st.conn(g, n.index, t);
        const Matrix m = transport_matrix(st, g, n.index, n.a, n.b);
        const int j = n.index;
        const TermId rows = st.comp(j + 1, st.comp(j, m.a, m.b), st.comp(j, m.c, m.d));
        const TermId cols = st.comp(j, st.comp(j + 1, m.a, m.c), st.comp(j + 1, m.b, m.d));
        REQUIRE(st.well_formed(rows));
        if (q.contains(lhs) && q.contains(rows)) {
          CHECK(q.decide_equal(lhs, rows));
          ++checked;
        }
        if (st.well_formed(cols) && q.contains(cols) && q.contains(rows)) {
          CHECK(q.decide_equal(rows, cols));
          ++alternative;
        }
      }
    }
    CHECK(checked > 0);
    CHECK(alternative > 0);
  }
}

TEST_CASE("connection composition gives degeneracies") {
  for (const char* name : {"interval", "p3"}) {
    CAPTURE(name);
    auto q = free_strict(shared(fixtures::builtin(name)), {.max_dim = 2, .depth = 4});
    auto& st = *q.store;
    int checked = 0;
    const std::vector<TermId> universe = q.universe;
    for (TermId x : universe) {
      if (st.dim(x) != 1) continue;
      const TermId plus = st.conn(Sign::Plus, 1, x);
      const TermId minus = st.conn(Sign::Minus, 1, x);
      for (int j : {1, 2}) {
        const TermId lhs = st.comp(j, plus, minus);
        if (!st.well_formed(lhs) || !q.contains(lhs)) continue;
        CHECK(q.decide_equal(lhs, st.degen(j == 1 ? 2 : 1, x)));
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("term faces satisfy the cubical identities") {
  auto q = free_strict(shared(fixtures::p3()), {.max_dim = 3, .depth = 3});
  auto& st = *q.store;
  int checked = 0;
  const std::vector<TermId> universe = q.universe;
  for (TermId t : universe) {
    const int n = st.dim(t);
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i)
        for (Sign a : {Sign::Minus, Sign::Plus})
          for (Sign b : {Sign::Minus, Sign::Plus}) {
            CHECK(st.face(st.face(t, a, j), b, i) == st.face(st.face(t, b, i), a, j - 1));
            ++checked;
          }
  }
  CHECK(checked > 0);
}
