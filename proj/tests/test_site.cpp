#include <map>
#include <random>
#include <set>

#include "cubikit/site.hpp"
#include "doctest.h"
#include "site_oracle.hpp"

using namespace cubikit;

namespace {

Generator s(int n, int j) { return Generator::face(Sign::Minus, n, j); }
Generator t(int n, int j) { return Generator::face(Sign::Plus, n, j); }
Generator e(int n, int j) { return Generator::degeneracy(n, j); }
Generator cm(int n, int j) { return Generator::connection(Sign::Minus, n, j); }
Generator cp(int n, int j) { return Generator::connection(Sign::Plus, n, j); }

// Cube realization: a word m -> n acts as a map I^n -> I^m, faces insert a
// constant, degeneracies drop a coordinate, connections merge two
// coordinates with max (minus) or min (plus). Lattice polynomials are fixed
// by their values on vertices, so vertex tables decide equality.
std::vector<int> apply_generator(const Generator& g, const std::vector<int>& x) {
  std::vector<int> y;
  const int j = g.index - 1;
  switch (g.kind) {
    case Generator::Kind::Face:
      y = x;
      y.insert(y.begin() + j, g.sign == Sign::Minus ? 0 : 1);
      break;
    case Generator::Kind::Degeneracy:
      y = x;
      y.erase(y.begin() + j);
      break;
    case Generator::Kind::Connection:
      y = x;
      y[j] = g.sign == Sign::Minus ? std::max(x[j], x[j + 1]) : std::min(x[j], x[j + 1]);
      y.erase(y.begin() + j + 1);
      break;
  }
  return y;
}

std::vector<std::vector<int>> realize(const Word& w) {
  std::vector<std::vector<int>> table;
  for (int bits = 0; bits < (1 << w.cod); ++bits) {
    std::vector<int> x(w.cod);
    for (int k = 0; k < w.cod; ++k) x[k] = (bits >> k) & 1;
    // Outermost generator acts first on points.
    for (const auto& g : w.gens) x = apply_generator(g, x);
    table.push_back(x);
  }
  return table;
}

}  // namespace

TEST_CASE("normalize reproduces the worked examples") {
  CHECK(to_string(normalize(Word::of({s(2, 1), s(3, 2)}), Variant::Plain)) ==
        "s{2,1}.s{3,1}");
  CHECK(normalize(Word::of({s(3, 2), e(3, 2)}), Variant::Semireflexive) ==
        Word::identity(2));
  CHECK(normalize(Word::of({s(2, 1), cm(2, 1)}), Variant::Reflexive) ==
        Word::identity(1));
  CHECK(words_equal(Word::of({t(1, 1), s(2, 2)}), Word::of({s(1, 1), t(2, 1)}),
                    Variant::Plain));
}

TEST_CASE("normalize rejects ill-composed and out-of-variant words") {
  CHECK_THROWS_AS(Word::of({s(1, 1), s(3, 1)}), CompositionError);
  CHECK_THROWS_AS(normalize(Word::of({s(2, 1), e(2, 1)}), Variant::Plain),
                  CapabilityError);
  CHECK_THROWS_AS(normalize(Word::of({s(2, 1), cp(2, 1)}), Variant::Semireflexive),
                  CapabilityError);
}

TEST_CASE("word syntax round-trips and reports columns") {
  Word w = Word::of({e(4, 1), cm(3, 2), s(3, 3)});
  CHECK(parse_word(to_string(w)) == w);
  CHECK(parse_word("id{3}") == Word::identity(3));
  try {
    parse_word("s{2,1}.q{3,1}");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.column == 8);
  }
  CHECK_THROWS_AS(parse_word("s{1,1}.s{3,1}"), ParseError);
  CHECK_THROWS_AS(parse_word("cm{1,1}"), ParseError);
}

TEST_CASE("step budget exhaustion carries the partial word") {
  Word w = Word::of({s(1, 1), s(2, 2), s(3, 3)});
  try {
    normalize(w, Variant::Plain, 1);
    FAIL("expected budget exhaustion");
  } catch (const BudgetExceeded& err) {
    CHECK(!err.partial.empty());
  }
}

TEST_CASE("Hom(n,0) in the plain site has 2^n classes") {
  for (int n = 0; n <= 4; ++n) {
    auto hom = enumerate_hom(n, 0, Variant::Plain, n + 2);
    CHECK(hom.classes.size() == (std::size_t{1} << n));
    CHECK(hom.stabilized);
  }
}

TEST_CASE("normal forms order degeneracies, connections, faces") {
  auto rank = [](const Generator& g) {
    return g.kind == Generator::Kind::Degeneracy ? 0
           : g.kind == Generator::Kind::Connection ? 1
                                                   : 2;
  };
  auto hom = enumerate_hom(2, 2, Variant::Reflexive, 4);
  CHECK(!hom.classes.empty());
  for (const auto& w : hom.classes) {
    for (std::size_t p = 0; p + 1 < w.gens.size(); ++p) {
      CHECK(rank(w.gens[p]) <= rank(w.gens[p + 1]));
    }
  }
}

TEST_CASE("rewriting agrees with the brute-force congruence closure") {
  for (Variant v : {Variant::Plain, Variant::Semireflexive, Variant::Reflexive}) {
    CAPTURE(variant_name(v));
    auto cl = oracle::closure(v, 4, 4);
    std::map<Word, int> nf_to_class;
    std::map<int, Word> class_to_nf;
    std::size_t mismatches = 0;
    for (std::size_t p = 0; p < cl.words.size(); ++p) {
      const Word nf = normalize(cl.words[p], v);
      REQUIRE(nf.length() <= cl.words[p].length());
      REQUIRE(nf.max_level() <= std::max(cl.words[p].max_level(), 0));
      auto [a, fresh_a] = nf_to_class.emplace(nf, cl.cls[p]);
      auto [b, fresh_b] = class_to_nf.emplace(cl.cls[p], nf);
      if (a->second != cl.cls[p] || b->second != nf) ++mismatches;
    }
    CHECK(mismatches == 0);
    CHECK(nf_to_class.size() == class_to_nf.size());
  }
}

TEST_CASE("relation instances hold in the cube realization") {
  for (const auto& r : relation_instances(Variant::Reflexive, 5)) {
    CAPTURE(r.origin);
    CAPTURE(to_string(r.lhs));
    CHECK(realize(r.lhs) == realize(r.rhs));
  }
}

TEST_CASE("library relation table matches the transcribed boxes") {
  for (Variant v : {Variant::Plain, Variant::Semireflexive, Variant::Reflexive}) {
    std::set<std::pair<Word, Word>> lib;
    for (const auto& r : relation_instances(v, 4)) lib.insert({r.lhs, r.rhs});
    std::set<std::pair<Word, Word>> boxes;
    for (const auto& r : oracle::relations(v, 4)) {
      Word lhs = Word::of(r.lhs);
      Word rhs = r.rhs.empty() ? Word::identity(lhs.dom) : Word::of(r.rhs);
      boxes.insert({lhs, rhs});
    }
    CHECK(lib == boxes);
  }
}

TEST_CASE("critical pairs join up to level 5") {
  for (Variant v : {Variant::Plain, Variant::Semireflexive, Variant::Reflexive}) {
    auto report = check_local_confluence(5, 3, v);
    CHECK(report.examined > 0);
    CHECK(report.unjoinable.empty());
  }
  CHECK(check_local_confluence(1, 1, Variant::Plain).unjoinable.empty());
}

TEST_CASE("random words: normal form is idempotent and sound") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 2000; ++trial) {
    int dom = static_cast<int>(rng() % 4);
    Word w = Word::identity(dom);
    int len = static_cast<int>(rng() % 9);
    for (int k = 0; k < len; ++k) {
      auto gens = generators_from(w.cod, Variant::Reflexive, 6);
      const Generator g = gens[rng() % gens.size()];
      w.gens.insert(w.gens.begin(), g);
      w.cod = g.cod();
    }
    Word nf = normalize(w, Variant::Reflexive);
    CHECK(is_normal(nf, Variant::Reflexive));
    CHECK(normalize(nf, Variant::Reflexive) == nf);
    CHECK(realize(nf) == realize(w));
  }
}
