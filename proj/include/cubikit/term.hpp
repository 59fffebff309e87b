#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubikit/cubical_set.hpp"

namespace cubikit {

using TermId = std::uint32_t;

enum class TermKind : std::uint8_t {
  Gen = 0,
  Comp = 1,
  Degen = 2,
  Conn = 3,
  Rev = 4,
  Bracket = 5,
  BracketConn = 6,
};

// One hash-consed magma term. Comp(j, a, b) reads "a then b" and is
// composable when t_j(a) = s_j(b).
struct TermNode {
  TermKind kind = TermKind::Gen;
  Sign sign = Sign::Minus;  // connection / connection-bracket sign
  int index = 0;            // j; for Gen the cell index
  int dim = 0;
  int depth = 1;
  TermId a = 0;
  TermId b = 0;

  bool operator==(const TermNode&) const = default;
};

// Arena of terms over generating cells of a base cubical set. Equal
// constructors with equal arguments return the same id, so syntactic
// equality is id equality.
class TermStore {
 public:
  explicit TermStore(std::shared_ptr<const TruncatedCubicalSet> base);

  const TruncatedCubicalSet& base() const { return *base_; }
  std::shared_ptr<const TruncatedCubicalSet> base_ptr() const { return base_; }

  TermId gen(int dim, int cell);
  TermId comp(int j, TermId a, TermId b);
  TermId degen(int j, TermId t);
  TermId conn(Sign g, int j, TermId t);
  TermId rev(int j, TermId t);
  // Brackets collapse on equal arguments: [a,a]_j is literally degen(j, a)
  // and the connection bracket is literally conn(g, j, a).
  TermId bracket(int j, TermId a, TermId b);
  TermId bracket_conn(Sign g, int j, TermId a, TermId b);

  const TermNode& node(TermId t) const { return nodes_.at(t); }
  int dim(TermId t) const { return node(t).dim; }
  int depth(TermId t) const { return node(t).depth; }
  std::size_t size() const { return nodes_.size(); }

  // s_i (Minus) or t_i (Plus) of an n-cell term, 1 <= i <= n.
  TermId face(TermId t, Sign s, int i);
  bool well_formed(TermId t);

  // Representative order: depth, constructor, indices, then children.
  int compare(TermId x, TermId y) const;

  std::string print(TermId t) const;
  TermId parse(const std::string& text);

 private:
  struct KeyHash {
    std::size_t operator()(const TermNode& n) const;
  };
  TermId intern(const TermNode& n);

  std::shared_ptr<const TruncatedCubicalSet> base_;
  std::vector<TermNode> nodes_;
  std::unordered_map<TermNode, TermId, KeyHash> ids_;
  std::unordered_map<std::uint64_t, TermId> faces_;
  std::unordered_map<TermId, bool> well_formed_;
};

}  // namespace cubikit
