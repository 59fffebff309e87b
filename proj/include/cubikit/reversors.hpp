#pragma once

#include <vector>

#include "cubikit/free_strict.hpp"
#include "cubikit/strict.hpp"

namespace cubikit {

// A reversor chain j^k_{i_k}, ..., j^{p+1}_{i_{p+1}}: squares commute with
// s/t in the chosen directions between consecutive levels, and the last
// map swaps source and target in direction i_{p+1}.
struct ReversorChain {
  int k = 0;
  int p = 0;
  std::vector<int> indices;  // i_{p+1}, ..., i_k

  bool operator==(const ReversorChain&) const = default;
};

struct StructureDeclaration {
  enum class Kind { Minimal, Maximal, General };
  Kind kind = Kind::Minimal;
  int m = 0;
  std::vector<ReversorChain> chains;  // General only

  bool operator==(const StructureDeclaration&) const = default;
};

const char* structure_kind_name(StructureDeclaration::Kind k);
StructureDeclaration::Kind parse_structure_kind(const std::string& s);

// Range and totality of every map j^k_j with m < k <= N.
Report check_reversor_tables(const TruncatedCubicalSet& x, const ReversorTable& r);

// s_j(j^k_j(a)) = t_j(a) and t_j(j^k_j(a)) = s_j(a) for every k > m.
Report check_reversor_shape(const TruncatedCubicalSet& x, const ReversorTable& r);

// a ∘_j R(a) = 1_j(s_j a) and R(a) ∘_j a = 1_j(t_j a) for m < k <= N.
// Throws OutOfUniverse listing the missing composites, CapabilityError
// without degeneracy tables.
Report check_strict_inverses(const StrictInstance& c, const ReversorTable& r, int m);
Report check_strict_inverses(const QuotientStructure& q, const ReversorTable& r, int m);

// The minimal declaration reduces to check_reversor_shape; the maximal one
// checks every square between levels l and l-1 (l > m+1) and the swap
// triangle at level m+1; a general declaration checks its listed chains.
Report check_structure_declaration(const TruncatedCubicalSet& x, const ReversorTable& r,
                                   const StructureDeclaration& d);

// All b with a ∘_j b = 1_j(s_j a) and b ∘_j a = 1_j(t_j a).
std::vector<int> two_sided_inverses(const StrictInstance& c, int k, int j, int a);

}  // namespace cubikit
