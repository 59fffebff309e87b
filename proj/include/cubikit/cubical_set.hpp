#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubikit/common.hpp"
#include "cubikit/site.hpp"

namespace cubikit {

inline constexpr int kUndefined = -1;

// A cubical set truncated at dimension `truncation`. Cells are opaque
// labels; all structure lives in explicit index tables so that fixtures can
// be serialized and perturbed. Tables built from fixtures are total; tables
// derived from bounded free constructions may hold kUndefined entries.
class TruncatedCubicalSet {
 public:
  TruncatedCubicalSet() : TruncatedCubicalSet(0, Variant::Plain) {}
  TruncatedCubicalSet(int truncation, Variant variant);

  std::string name;

  int truncation() const { return truncation_; }
  Variant variant() const { return variant_; }
  void set_variant(Variant v) { variant_ = v; }

  int add_cell(int dim, const std::string& label);
  int size(int dim) const;
  const std::string& label(int dim, int cell) const;
  const std::vector<std::string>& labels(int dim) const { return labels_.at(dim); }
  // kUndefined when no cell carries this label.
  int find(int dim, const std::string& label) const;

  // s (Minus) / t (Plus) in direction j of a k-cell, 1 <= j <= k <= N.
  int face(int k, int j, Sign s, int x) const;
  // 1^k_{k+1,j}, 1 <= j <= k+1, k < N.
  int degeneracy(int k, int j, int x) const;
  // 1^{k,g}_{k+1,j}, 1 <= j <= k, 1 <= k < N.
  int connection(int k, Sign g, int j, int x) const;

  void set_face(int k, int j, Sign s, int x, int y);
  void set_degeneracy(int k, int j, int x, int y);
  void set_connection(int k, Sign g, int j, int x, int y);

  // Raw table rows, for checks that walk whole maps.
  const std::vector<int>& face_row(int k, int j, Sign s) const;
  const std::vector<int>& degeneracy_row(int k, int j) const;
  const std::vector<int>& connection_row(int k, Sign g, int j) const;

  bool operator==(const TruncatedCubicalSet& other) const;

 private:
  void check_dim(int dim) const;

  int truncation_;
  Variant variant_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::unordered_map<std::string, int>> index_;
  // faces_[k][j-1][sign], k >= 1
  std::vector<std::vector<std::array<std::vector<int>, 2>>> faces_;
  // degeneracies_[k][j-1], k <= N-1
  std::vector<std::vector<std::vector<int>>> degeneracies_;
  // connections_[k][j-1][sign], 1 <= k <= N-1
  std::vector<std::vector<std::array<std::vector<int>, 2>>> connections_;
};

// Range and totality problems, reported as violations under "table".
Report check_tables(const TruncatedCubicalSet& x, bool require_total = true);

// Every relation instance of the set's variant, checked pointwise wherever
// both sides are defined, plus the table checks.
Report validate(const TruncatedCubicalSet& x, bool require_total = true);

// Presheaf action, innermost generator first. Throws CapabilityError when
// the variant lacks a table, InputError for out-of-range input, and Error
// when a partial table is undefined at the visited cell.
int act(const TruncatedCubicalSet& x, const Word& w, int cell);

// Plain n-cube. k-cells are strings over {-,+,*} with k stars; the j-th
// face fixes the j-th star.
TruncatedCubicalSet standard_cube(int n);

// Freely adds degeneracies (and connections for the reflexive variant) to a
// plain cubical set, up to dimension n. Cells are pairs (raising normal
// word, cell of x); labels read "e{2,1}.e{1,1}(a)".
TruncatedCubicalSet free_reflexive(const TruncatedCubicalSet& x, int n, Variant v);

struct DimensionReport {
  int p_reflexions = 0;
  std::optional<int> p_connections;  // absent without connection tables
  int p = 0;
  int truncation = 0;
  // p equals the truncation, so nothing is certified above it.
  bool saturated = false;
};

// Throws CapabilityError if the set has no degeneracy tables.
DimensionReport dimension_report(const TruncatedCubicalSet& x);

}  // namespace cubikit
