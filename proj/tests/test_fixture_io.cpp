#include <doctest.h>

#include "cubikit/fixture_io.hpp"
#include "cubikit/fixtures.hpp"

using namespace cubikit;

namespace {

const char* kP3 = R"({
  "name": "P3", "truncation": 1, "variant": "plain",
  "cells": [["a", "b", "c", "d"], ["f", "g", "h"]],
  "faces": [
    {"dim": 1, "j": 1, "kind": "s", "map": {"f": "a", "g": "b", "h": "c"}},
    {"dim": 1, "j": 1, "kind": "t", "map": {"f": "b", "g": "c", "h": "d"}}
  ]
})";

std::string pointer_of(const std::string& text) {
  try {
    parse_fixture(text);
  } catch (const FixtureError& e) {
    return e.pointer;
  }
  return "<no error>";
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  s.replace(s.find(from), from.size(), to);
  return s;
}

}  // namespace

TEST_CASE("a hand-written P3 file") {
  const auto f = parse_fixture(kP3);
  CHECK(f.instance.cells == fixtures::p3());
  CHECK(f.instance.cells.size(0) + f.instance.cells.size(1) == 7);
  CHECK_FALSE(f.has_compositions);
  CHECK(f.family.functors.empty());
}

TEST_CASE("emit then parse is the identity on canonical fixtures") {
  for (const auto& name : fixtures::builtin_names()) {
    CAPTURE(name);
    const auto c = fixtures::builtin_instance(name);
    const std::string text = emit_fixture(c);
    const auto f = parse_fixture(text);
    CHECK(f.instance == c);
    CHECK(emit_fixture(f) == text);
  }
  for (const auto& fam : {fixtures::integer_loop_family(3), fixtures::s3_conjugation_family()}) {
    Fixture f;
    f.family = fam;
    f.instance = *fam.instances.front();
    f.has_compositions = true;
    const std::string text = emit_fixture(f);
    const auto g = parse_fixture(text);
    REQUIRE(g.family.transformations.size() == fam.transformations.size());
    for (std::size_t i = 0; i < fam.transformations.size(); ++i)
      CHECK(g.family.transformations[i] == fam.transformations[i]);
    CHECK(emit_fixture(g) == text);
  }
  Fixture s;
  s.instance = fixtures::integer_loop_maximal(2);
  s.has_compositions = true;
  s.structure = StructureDeclaration{StructureDeclaration::Kind::General, 0, {{2, 0, {1, 2}}}};
  CHECK(parse_fixture(emit_fixture(s)).structure == s.structure);
}

TEST_CASE("schema errors carry JSON pointers") {
  CHECK(pointer_of(replace(kP3, R"("j": 1, "kind": "s")", R"("j": 2, "kind": "s")")) ==
        "/faces/0/j");
  CHECK(pointer_of(replace(kP3, R"("f": "a")", R"("f": "z")")) == "/faces/0/map/f");
  CHECK(pointer_of(replace(kP3, R"("h": "d")", R"("q": "d")")) == "/faces/1/map/q");
  CHECK(pointer_of(replace(kP3, R"("truncation": 1)", R"("truncation": "1")")) == "/truncation");
  CHECK(pointer_of(replace(kP3, R"("variant": "plain")", R"("variant": "lax")")) == "/variant");
  CHECK(pointer_of(replace(kP3, R"("kind": "t")", R"("kind": "x")")) == "/faces/1/kind");
  CHECK(pointer_of(replace(kP3, R"(, "h": "d")", "")) == "");  // t_1 of h missing
  CHECK(pointer_of(replace(kP3, R"("cells")", R"("cellz")")) == "/cells");
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_fixture("{\n  \"truncation\": 1,\n  \"cells\": [[\"a\"] [\"f\"]]\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 19);
  }
}

TEST_CASE("declared variants need their tables") {
  auto reflexive = emit_fixture(StrictInstance(fixtures::builtin("interval-reflexive")));
  CHECK_NOTHROW(parse_fixture(reflexive));
  const auto start = reflexive.find("\"connections\"");
  REQUIRE(start != std::string::npos);
  // Drop the connections block.
  auto cut = reflexive;
  const auto end = cut.find("\n  ]", start);
  cut.erase(start - 4, end + 4 - (start - 4));
  CHECK_THROWS_AS(parse_fixture(cut), CapabilityError);
  CHECK(pointer_of(replace(kP3, R"("faces")", R"("degeneracies": [], "faces")")) ==
        "/degeneracies");
}

TEST_CASE("family references are resolved by name") {
  Fixture f;
  f.family = fixtures::integer_loop_family(2);
  f.instance = *f.family.instances.front();
  f.has_compositions = true;
  const std::string text = emit_fixture(f);
  CHECK(pointer_of(replace(text, R"("K": "neg")", R"("K": "inv")")).find("/transformations/") == 0);
  CHECK(pointer_of(replace(text, R"("target": "integer-loop")", R"("target": "nowhere")")) ==
        "/functors/0/target");
}
