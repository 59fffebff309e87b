#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubikit/strict.hpp"
#include "cubikit/term.hpp"

namespace cubikit {

struct FreeStrictOptions {
  int max_dim = 1;
  int depth = 3;
  // Adds Rev(j, t) generators with strict inverse laws in every dimension
  // >= 1 (groupoid case, m = 0).
  bool reversors = false;
  std::size_t max_terms = 3'000'000;
};

// Bounded part of the free strict cubical category on a cubical set: every
// well-formed term up to the given dimension and depth, partitioned by the
// congruence generated by the strict axioms, with induced class tables.
class QuotientStructure {
 public:
  std::shared_ptr<TermStore> store;
  FreeStrictOptions options;
  std::vector<TermId> universe;  // sorted by TermStore::compare
  // Induced operations; cell k of dimension d is the class whose
  // representative is reps[d][k]. Entries whose syntactic witness lies
  // beyond the depth bound are kUndefined or absent.
  StrictInstance tables;
  std::vector<std::vector<TermId>> reps;
  // Axiom instances whose right-hand side falls outside the universe.
  std::map<std::string, std::size_t> boundary_tally;

  bool contains(TermId t) const { return cls_.count(t) != 0; }
  // (dimension, class index); throws OutOfUniverse.
  std::pair<int, int> class_of(TermId t) const;
  TermId representative(TermId t) const;
  bool decide_equal(TermId a, TermId b) const;
  std::size_t class_count() const;
  std::size_t class_count(int dim) const;
  std::vector<TermId> members(int dim, int cls) const;

 private:
  friend QuotientStructure free_strict(std::shared_ptr<TermStore>, const FreeStrictOptions&);
  std::unordered_map<TermId, std::pair<int, int>> cls_;
};

QuotientStructure free_strict(std::shared_ptr<TermStore> store, const FreeStrictOptions& opt);
QuotientStructure free_strict(std::shared_ptr<const TruncatedCubicalSet> x,
                              const FreeStrictOptions& opt);

// The universe alone: all well-formed terms of dimension <= max_dim and
// depth <= depth, in generation order. Closed under faces and subterms.
std::vector<TermId> term_universe(TermStore& store, const FreeStrictOptions& opt);

}  // namespace cubikit
