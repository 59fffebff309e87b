#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubikit/free_strict.hpp"

namespace cubikit {

struct FreeWeakOptions {
  int max_dim = 2;
  int depth = 4;
  // false gives the impoverished structure with plain brackets only.
  bool connection_brackets = true;
  // Depth of the strict quotient that π lands in; 0 means `depth`.
  int strict_depth = 0;
  std::size_t max_terms = 2'000'000;
};

// Bounded fragment of a free cubical categorical stretching: magma terms M
// with bracket constructors, the strict quotient C, and π : M -> C.
class Stretching {
 public:
  std::shared_ptr<TermStore> store;                  // M
  std::shared_ptr<const QuotientStructure> strict;  // C
  FreeWeakOptions options;
  std::vector<TermId> terms;  // generation order
  // Skipped constructions, by reason.
  std::map<std::string, std::size_t> tally;

  bool contains(TermId t) const { return stored_.count(t) != 0; }
  // Class (dimension, index) of π(t) in C. Defined for any term over the
  // store; throws OutOfUniverse when a needed composite is not in C.
  std::pair<int, int> pi(TermId t) const;

 private:
  friend Stretching free_weak(std::shared_ptr<const TruncatedCubicalSet>, const FreeWeakOptions&);
  std::unordered_map<TermId, char> stored_;
  mutable std::unordered_map<TermId, std::pair<int, int>> pi_cache_;
};

struct AdmissiblePairKind {
  enum class Kind { Plain, Minus, Plus };
  Kind kind = Kind::Plain;
  int j = 0;  // face direction for Minus/Plus
};

bool admissible(const Stretching& s, TermId a, TermId b, AdmissiblePairKind kind);
// Stored pairs of dimension n, in generation order.
std::vector<std::pair<TermId, TermId>> admissible_pairs(const Stretching& s, int n,
                                                         AdmissiblePairKind kind);

// [a,b]^n_{n+1,j}; collapses to Degen(j, a) when a = b. Throws
// AdmissibilityError when the pair is not π-equal or indices are off.
TermId mk_bracket(Stretching& s, TermId a, TermId b, int n, int j);
// [a;b]^{n,g}_{n+1,j}; minus needs equal j-sources, plus equal j-targets.
TermId mk_bracket_conn(Stretching& s, TermId a, TermId b, int n, Sign g, int j);

Stretching free_weak(std::shared_ptr<const TruncatedCubicalSet> x, const FreeWeakOptions& opt);

// π commutes with faces and constructors, brackets project to
// degeneracies/connections of π-equal arguments, no stored bracket has equal
// arguments.
Report check_stretching(const Stretching& s);

struct CoherenceCell {
  std::string name;
  TermId term = 0;
  // Faces s_1, t_1, s_2, t_2 (top, bottom, left, right in the figure).
  std::array<TermId, 4> faces{};
  // Figure symbols for the same edges: "x", "y", "1_src", "1_tgt".
  std::array<std::string, 4> figure;
};

struct CoherenceDemo {
  Stretching stretching;
  TermId x = 0;
  TermId y = 0;
  std::array<CoherenceCell, 4> cells;
  // Printable table: cell, then s_1 / t_1 / s_2 / t_2 as terms.
  std::string table() const;
};

// The associativity coherence cells [x,y]_{2,1}, [x,y]_{2,2}, [x;y]^-_{2,1}
// and [x;y]^+_{2,1} over P3 with x = f*(g*h), y = (f*g)*h. With `opposite`
// the literal symbols x = (h*g)*f, y = h*(g*f) are used on P3op.
CoherenceDemo coherence_cells_demo(bool opposite = false);
// Compares each cell's faces with the figure symbols and checks the π values.
Report check_coherence_demo(const CoherenceDemo& d);

}  // namespace cubikit
