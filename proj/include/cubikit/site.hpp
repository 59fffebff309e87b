#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubikit/common.hpp"

namespace cubikit {

// A generating morphism of the cubical site.
//
// Faces s/t at level n go n -> n-1 with 1 <= index <= n. Degeneracies at
// level n go n-1 -> n with 1 <= index <= n. Connections at level n go
// n-1 -> n with 1 <= index <= n-1, so they start at level 2.
struct Generator {
  enum class Kind : std::uint8_t { Face = 0, Degeneracy = 1, Connection = 2 };

  Kind kind = Kind::Face;
  Sign sign = Sign::Minus;  // ignored for degeneracies
  int level = 1;
  int index = 1;

  static Generator face(Sign s, int level, int index) {
    return {Kind::Face, s, level, index};
  }
  static Generator degeneracy(int level, int index) {
    return {Kind::Degeneracy, Sign::Minus, level, index};
  }
  static Generator connection(Sign g, int level, int index) {
    return {Kind::Connection, g, level, index};
  }

  int dom() const { return kind == Kind::Face ? level : level - 1; }
  int cod() const { return kind == Kind::Face ? level - 1 : level; }
  bool raising() const { return kind != Kind::Face; }
  bool valid() const;
  Variant required_variant() const;

  bool operator==(const Generator&) const = default;
  auto operator<=>(const Generator&) const = default;
};

std::string to_string(const Generator& g);

// A composable word, outermost generator first: gens[0] is applied last.
// The empty word is the identity on `dom`.
struct Word {
  int dom = 0;
  int cod = 0;
  std::vector<Generator> gens;

  static Word identity(int n) { return {n, n, {}}; }
  // Builds a word from outermost-first generators; throws CompositionError
  // when adjacent generators do not compose.
  static Word of(std::vector<Generator> gens);

  std::size_t length() const { return gens.size(); }
  int max_level() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

// outer ∘ inner; throws CompositionError unless inner.cod == outer.dom.
Word compose(const Word& outer, const Word& inner);

std::string to_string(const Word& w);
// Accepts "s{n,j}", "t{n,j}", "e{n,j}", "cm{n,j}", "cp{n,j}" joined by '.',
// or "id{n}". Errors carry the column of the offending token.
Word parse_word(const std::string& text);

// One rewrite step on an adjacent pair (outer, inner). Empty replacement
// means the pair cancels to an identity.
struct PairRewrite {
  std::vector<Generator> replacement;
  const char* origin;
};
std::optional<PairRewrite> rewrite_pair(const Generator& outer,
                                        const Generator& inner, Variant v);

// Default step budget for normalize: CUBIKIT_STEP_BUDGET or 1'000'000.
std::size_t default_step_budget();

Word normalize(const Word& w, Variant v);
Word normalize(const Word& w, Variant v, std::size_t budget);
bool is_normal(const Word& w, Variant v);
bool words_equal(const Word& a, const Word& b, Variant v);

// Throws CapabilityError if the word uses generators the variant lacks.
void check_variant(const Word& w, Variant v);

// Every generator with the given domain whose level is at most max_level.
std::vector<Generator> generators_from(int dom, Variant v, int max_level);

struct HomSet {
  std::vector<Word> classes;  // normal forms, sorted
  bool stabilized = false;    // same count at max_len and max_len - 1
  std::size_t previous_count = 0;
};
HomSet enumerate_hom(int m, int n, Variant v, int max_len);

struct RelationInstance {
  Word lhs;
  Word rhs;
  std::string origin;
};
// All instances of the defining relations whose generators sit at levels
// <= max_level, oriented lhs -> rhs.
std::vector<RelationInstance> relation_instances(Variant v, int max_level);

struct CriticalPair {
  Word overlap;
  Word left;   // normal form after rewriting the outer pair first
  Word right;  // normal form after rewriting the inner pair first
};
struct ConfluenceReport {
  std::vector<CriticalPair> unjoinable;
  std::size_t examined = 0;
};
// Rules have length-2 left sides, so critical pairs are the length-3 words
// whose two adjacent pairs both rewrite. Requires max_len >= 3 to find any.
ConfluenceReport check_local_confluence(int max_level, int max_len, Variant v);

}  // namespace cubikit
