#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cubikit/cubical_set.hpp"

namespace cubikit {

// Reversor maps j^k_j for k > m, stored per dimension and direction.
struct ReversorTable {
  int m = 0;
  // maps[k][j-1] : cells[k] -> cells[k], present for m < k <= N
  std::vector<std::vector<std::vector<int>>> maps;

  int apply(int k, int j, int x) const;
  bool defined(int k) const {
    return k >= 0 && k < static_cast<int>(maps.size()) && !maps[k].empty();
  }
  bool operator==(const ReversorTable&) const = default;
};

using CompositionTable = std::map<std::pair<int, int>, int>;

// Cells with explicit composition tables. Composition follows the order
// a∘_j b defined when t_j(a) = s_j(b), with s_j(a∘_j b) = s_j(a) and
// t_j(a∘_j b) = t_j(b).
struct StrictInstance {
  TruncatedCubicalSet cells;
  // comp[k][j-1] for 1 <= k <= N
  std::vector<std::vector<CompositionTable>> comp;
  std::optional<ReversorTable> reversors;

  StrictInstance() = default;
  explicit StrictInstance(TruncatedCubicalSet x);

  const std::string& name() const { return cells.name; }
  int truncation() const { return cells.truncation(); }
  int compose(int k, int j, int a, int b) const;
  void set_composite(int k, int j, int a, int b, int c);
  const CompositionTable& table(int k, int j) const;

  bool operator==(const StrictInstance&) const = default;
};

// Checks composability and position axioms, associativity, units,
// interchange, degeneracy and connection distribution, both transport laws,
// connection composition and the relations of the underlying reflexive set.
// Each law is checked wherever all of its composites are defined.
Report check_strict_axioms(const StrictInstance& c);

}  // namespace cubikit
