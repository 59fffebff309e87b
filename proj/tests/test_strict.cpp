#include <doctest.h>

#include <algorithm>

#include "cubikit/fixtures.hpp"
#include "cubikit/strict.hpp"

using namespace cubikit;

namespace {

bool has_rule(const Report& r, const std::string& prefix) {
  return std::any_of(r.begin(), r.end(),
                     [&](const Violation& v) { return v.rule.rfind(prefix, 0) == 0; });
}

}  // namespace

TEST_CASE("builtin instances satisfy the strict axioms") {
  for (const char* name : {"integer-loop", "integer-loop-maximal", "s3"}) {
    CAPTURE(name);
    auto r = check_strict_axioms(fixtures::builtin_instance(name));
    for (const auto& v : r) MESSAGE(v.rule << ": " << v.detail);
    CHECK(r.empty());
  }
  for (int n = 1; n <= 5; ++n) CHECK(check_strict_axioms(fixtures::integer_loop(n)).empty());
}

TEST_CASE("a corrupted 1-composite breaks associativity") {
  auto s = fixtures::symmetric_group3();
  s.set_composite(1, 1, 1, 2, (s.compose(1, 1, 1, 2) + 1) % 6);
  auto r = check_strict_axioms(s);
  CHECK(has_rule(r, "associativity"));
}

TEST_CASE("a composite with the wrong boundary breaks the position axioms") {
  auto s = fixtures::integer_loop(3);
  // [0,0,0,0] ∘_1 [0,0,0,0] rewritten to [1,1,0,0].
  const int zero = s.cells.find(2, "[0,0,0,0]");
  const int other = s.cells.find(2, "[1,1,0,0]");
  s.set_composite(2, 1, zero, zero, other);
  CHECK(has_rule(check_strict_axioms(s), "position"));
}

TEST_CASE("composites of non-composable cells are rejected") {
  auto s = StrictInstance(fixtures::p3());
  const int f = s.cells.find(1, "f");
  const int h = s.cells.find(1, "h");
  s.set_composite(1, 1, f, h, f);
  CHECK(has_rule(check_strict_axioms(s), "composability"));
}

TEST_CASE("every single 2-composite perturbation of the integer loop is caught") {
  const auto base = fixtures::integer_loop(2);
  int tried = 0;
  for (int j = 1; j <= 2; ++j) {
    for (const auto& [key, c] : base.table(2, j)) {
      for (int d = 0; d < base.cells.size(2); ++d) {
        if (d == c) continue;
        auto bad = base;
        bad.set_composite(2, j, key.first, key.second, d);
        ++tried;
        CHECK_FALSE(check_strict_axioms(bad).empty());
      }
    }
  }
  CHECK(tried > 0);
}
