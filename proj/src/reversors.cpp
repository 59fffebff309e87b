#include "cubikit/reversors.hpp"

#include <algorithm>

namespace cubikit {

namespace {

std::string sign_face(Sign s, int j) {
  return std::string(1, sign_char(s)) + "_" + std::to_string(j);
}

bool has_map(const ReversorTable& r, int k, int j) {
  return r.defined(k) && j >= 1 && j <= static_cast<int>(r.maps[k].size());
}

// Swap triangle of j^k_j on every k-cell.
void check_triangle(const TruncatedCubicalSet& x, const ReversorTable& r, int k, int j,
                    const std::string& rule, Report& out) {
  for (int a = 0; a < x.size(k); ++a) {
    const int ra = r.apply(k, j, a);
    for (Sign s : {Sign::Minus, Sign::Plus}) {
      const int got = x.face(k, j, s, ra);
      const int want = x.face(k, j, flip(s), a);
      if (got != want) {
        out.push_back({rule, "k=" + std::to_string(k) + ", j=" + std::to_string(j) + ": " +
                                 sign_face(s, j) + "(R " + x.label(k, a) + ") = " +
                                 x.label(k - 1, got) + ", expected " + x.label(k - 1, want)});
      }
    }
  }
}

// Square between j^l_{il} and j^{l-1}_{il1}: faces in direction il commute
// with the reversors.
void check_square(const TruncatedCubicalSet& x, const ReversorTable& r, int l, int il, int il1,
                  Report& out) {
  for (int a = 0; a < x.size(l); ++a) {
    const int ra = r.apply(l, il, a);
    for (Sign s : {Sign::Minus, Sign::Plus}) {
      const int got = x.face(l, il, s, ra);
      const int want = r.apply(l - 1, il1, x.face(l, il, s, a));
      if (got != want) {
        out.push_back({"structure square",
                       "k=" + std::to_string(l) + ", i_k=" + std::to_string(il) +
                           ", i_{k-1}=" + std::to_string(il1) + ": " + sign_face(s, il) + "(R " +
                           x.label(l, a) + ") = " + x.label(l - 1, got) + ", expected " +
                           x.label(l - 1, want)});
      }
    }
  }
}

}  // namespace

const char* structure_kind_name(StructureDeclaration::Kind k) {
  switch (k) {
    case StructureDeclaration::Kind::Minimal:
      return "minimal";
    case StructureDeclaration::Kind::Maximal:
      return "maximal";
    case StructureDeclaration::Kind::General:
      return "general";
  }
  return "?";
}

StructureDeclaration::Kind parse_structure_kind(const std::string& s) {
  if (s == "minimal") return StructureDeclaration::Kind::Minimal;
  if (s == "maximal") return StructureDeclaration::Kind::Maximal;
  if (s == "general") return StructureDeclaration::Kind::General;
  throw InputError("unknown structure variant '" + s + "'");
}

Report check_reversor_tables(const TruncatedCubicalSet& x, const ReversorTable& r) {
  Report out;
  if (r.m < 0) out.push_back({"reversor table", "negative threshold m"});
  for (int k = std::max(r.m + 1, 1); k <= x.truncation(); ++k) {
    for (int j = 1; j <= k; ++j) {
      if (!has_map(r, k, j)) {
        out.push_back({"reversor table", "missing map j^" + std::to_string(k) + "_" +
                                             std::to_string(j)});
        continue;
      }
      const auto& row = r.maps[k][j - 1];
      if (static_cast<int>(row.size()) != x.size(k)) {
        out.push_back({"reversor table", "j^" + std::to_string(k) + "_" + std::to_string(j) +
                                             " has " + std::to_string(row.size()) +
                                             " entries for " + std::to_string(x.size(k)) +
                                             " cells"});
        continue;
      }
      for (int a = 0; a < x.size(k); ++a) {
        if (row[a] < 0 || row[a] >= x.size(k)) {
          out.push_back({"reversor table", "j^" + std::to_string(k) + "_" + std::to_string(j) +
                                               " undefined or out of range at " +
                                               x.label(k, a)});
        }
      }
    }
  }
  for (int k = x.truncation() + 1; k < static_cast<int>(r.maps.size()); ++k) {
    if (!r.maps[k].empty()) {
      out.push_back({"reversor table", "map above the truncation at k=" + std::to_string(k)});
    }
  }
  return out;
}

Report check_reversor_shape(const TruncatedCubicalSet& x, const ReversorTable& r) {
  Report out = check_reversor_tables(x, r);
  if (!out.empty()) return out;
  for (int k = std::max(r.m + 1, 1); k <= x.truncation(); ++k)
    for (int j = 1; j <= k; ++j) check_triangle(x, r, k, j, "reversor shape", out);
  return out;
}

Report check_strict_inverses(const StrictInstance& c, const ReversorTable& r, int m) {
  const auto& x = c.cells;
  if (!has_degeneracies(x.variant())) {
    throw CapabilityError("strict inverse laws need degeneracy tables");
  }
  Report out = check_reversor_tables(x, r);
  if (!out.empty()) return out;
  std::vector<std::string> missing;
  for (int k = std::max(m + 1, 1); k <= x.truncation(); ++k) {
    for (int j = 1; j <= k; ++j) {
      for (int a = 0; a < x.size(k); ++a) {
        const int ra = r.apply(k, j, a);
        struct Law {
          const char* rule;
          int left, right;
          Sign unit_face;
        };
        for (const Law& law : {Law{"inverse (right)", a, ra, Sign::Minus},
                               Law{"inverse (left)", ra, a, Sign::Plus}}) {
          const std::string witness = "k=" + std::to_string(k) + ", j=" + std::to_string(j) +
                                      ": " + x.label(k, law.left) + " o " +
                                      x.label(k, law.right);
          const int lhs = c.compose(k, j, law.left, law.right);
          if (lhs == kUndefined) {
            // Not composable means the shape is wrong, which is a violation
            // rather than a gap in the tables.
            if (x.face(k, j, Sign::Plus, law.left) != x.face(k, j, Sign::Minus, law.right)) {
              out.push_back({law.rule, witness + " is not composable"});
            } else {
              missing.push_back(witness);
            }
            continue;
          }
          const int rhs = x.degeneracy(k - 1, j, x.face(k, j, law.unit_face, a));
          if (rhs == kUndefined) {
            missing.push_back("degeneracy of " + x.label(k - 1, x.face(k, j, law.unit_face, a)));
            continue;
          }
          if (lhs != rhs) {
            out.push_back({law.rule, witness + " = " + x.label(k, lhs) + ", expected " +
                                         x.label(k, rhs)});
          }
        }
      }
    }
  }
  if (!missing.empty()) {
    std::string msg = "composites outside the carrier: " + missing.front();
    if (missing.size() > 1) msg += " (and " + std::to_string(missing.size() - 1) + " more)";
    throw OutOfUniverse(msg);
  }
  return out;
}

Report check_strict_inverses(const QuotientStructure& q, const ReversorTable& r, int m) {
  return check_strict_inverses(q.tables, r, m);
}

Report check_structure_declaration(const TruncatedCubicalSet& x, const ReversorTable& r,
                                   const StructureDeclaration& d) {
  using Kind = StructureDeclaration::Kind;
  if (d.m != r.m) {
    return {{"structure", "declaration threshold m=" + std::to_string(d.m) +
                              " differs from the table's m=" + std::to_string(r.m)}};
  }
  if (d.kind == Kind::Minimal) return check_reversor_shape(x, r);
  Report out = check_reversor_tables(x, r);
  if (!out.empty()) return out;
  const int n = x.truncation();
  if (d.kind == Kind::Maximal) {
    if (d.m + 1 <= n) {
      for (int i = 1; i <= d.m + 1; ++i) check_triangle(x, r, d.m + 1, i, "structure triangle", out);
    }
    for (int l = d.m + 2; l <= n; ++l)
      for (int il = 1; il <= l; ++il)
        for (int il1 = 1; il1 <= l - 1; ++il1) check_square(x, r, l, il, il1, out);
    return out;
  }
  for (std::size_t c = 0; c < d.chains.size(); ++c) {
    const ReversorChain& ch = d.chains[c];
    const std::string where = "chain " + std::to_string(c);
    if (ch.k <= d.m || ch.k > n || ch.p < d.m || ch.p >= ch.k ||
        static_cast<int>(ch.indices.size()) != ch.k - ch.p) {
      out.push_back({"structure", where + " has an invalid shape"});
      continue;
    }
    bool ok = true;
    for (int l = ch.p + 1; l <= ch.k; ++l) {
      const int il = ch.indices[l - ch.p - 1];
      if (il < 1 || il > l) ok = false;
    }
    if (!ok) {
      out.push_back({"structure", where + " has an index out of range"});
      continue;
    }
    check_triangle(x, r, ch.p + 1, ch.indices.front(), "structure triangle", out);
    for (int l = ch.p + 2; l <= ch.k; ++l) {
      check_square(x, r, l, ch.indices[l - ch.p - 1], ch.indices[l - ch.p - 2], out);
    }
  }
  return out;
}

std::vector<int> two_sided_inverses(const StrictInstance& c, int k, int j, int a) {
  const auto& x = c.cells;
  const int right_unit = x.degeneracy(k - 1, j, x.face(k, j, Sign::Minus, a));
  const int left_unit = x.degeneracy(k - 1, j, x.face(k, j, Sign::Plus, a));
  std::vector<int> out;
  for (int b = 0; b < x.size(k); ++b) {
    if (c.compose(k, j, a, b) == right_unit && right_unit != kUndefined &&
        c.compose(k, j, b, a) == left_unit && left_unit != kUndefined) {
      out.push_back(b);
    }
  }
  return out;
}

}  // namespace cubikit
