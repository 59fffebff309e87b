#include "cubikit/strict.hpp"

#include <unordered_map>

namespace cubikit {

int ReversorTable::apply(int k, int j, int x) const {
  if (!defined(k) || j < 1 || j > static_cast<int>(maps[k].size())) {
    throw CapabilityError("no reversor j^" + std::to_string(k) + "_" + std::to_string(j));
  }
  return maps[k][j - 1].at(x);
}

StrictInstance::StrictInstance(TruncatedCubicalSet x) : cells(std::move(x)) {
  comp.resize(cells.truncation() + 1);
  for (int k = 1; k <= cells.truncation(); ++k) comp[k].resize(k);
}

const CompositionTable& StrictInstance::table(int k, int j) const {
  if (k < 1 || k > truncation() || j < 1 || j > k) {
    throw InputError("no composition ∘^" + std::to_string(k) + "_" + std::to_string(j));
  }
  return comp[k][j - 1];
}

int StrictInstance::compose(int k, int j, int a, int b) const {
  if (a == kUndefined || b == kUndefined) return kUndefined;
  const auto& t = table(k, j);
  auto it = t.find({a, b});
  return it == t.end() ? kUndefined : it->second;
}

void StrictInstance::set_composite(int k, int j, int a, int b, int c) {
  table(k, j);
  comp[k][j - 1][{a, b}] = c;
}

namespace {

class Checker {
 public:
  explicit Checker(const StrictInstance& c) : c_(c), x_(c.cells) {
    const int n = x_.truncation();
    by_left_.resize(n + 1);
    by_result_.resize(n + 1);
    for (int k = 1; k <= n; ++k) {
      by_left_[k].resize(k);
      by_result_[k].resize(k);
      for (int j = 1; j <= k; ++j) {
        for (const auto& [ab, r] : c_.table(k, j)) {
          by_left_[k][j - 1][ab.first].push_back({ab.second, r});
          by_result_[k][j - 1][r].push_back(ab);
        }
      }
    }
  }

  Report run() {
    const int n = x_.truncation();
    for (int k = 1; k <= n; ++k) {
      for (int j = 1; j <= k; ++j) {
        for (const auto& [ab, r] : c_.table(k, j)) entry(k, j, ab.first, ab.second, r);
      }
    }
    units();
    connection_composition();
    for (auto& v : validate(x_, false)) out_.push_back(std::move(v));
    return std::move(out_);
  }

 private:
  std::string name(int k, int x) const {
    if (x == kUndefined) return "?";
    if (x < 0 || x >= x_.size(k)) return "#" + std::to_string(x);
    return x_.label(k, x);
  }
  int face(int k, int j, Sign s, int x) const {
    return x == kUndefined ? kUndefined : x_.face(k, j, s, x);
  }
  int degen(int k, int j, int x) const {
    if (x == kUndefined || k >= x_.truncation() || !has_degeneracies(x_.variant()))
      return kUndefined;
    return x_.degeneracy(k, j, x);
  }
  int conn(int k, Sign g, int j, int x) const {
    if (x == kUndefined || k < 1 || k >= x_.truncation() ||
        !has_connections(x_.variant()))
      return kUndefined;
    return x_.connection(k, g, j, x);
  }
  int comp(int k, int j, int a, int b) const {
    if (k > x_.truncation()) return kUndefined;
    return c_.compose(k, j, a, b);
  }
  void expect_equal(const std::string& rule, int k, int lhs, int rhs,
                    const std::string& where) {
    if (lhs == kUndefined || rhs == kUndefined || lhs == rhs) return;
    out_.push_back({rule, where + ": " + name(k, lhs) + " vs " + name(k, rhs)});
  }
  std::string triple(int k, int j, int a, int b) const {
    return name(k, a) + " ∘^" + std::to_string(k) + "_" + std::to_string(j) + " " +
           name(k, b);
  }

  void entry(int k, int j, int a, int b, int r) {
    const int n = x_.truncation();
    if (a < 0 || a >= x_.size(k) || b < 0 || b >= x_.size(k) || r < 0 || r >= x_.size(k)) {
      out_.push_back({"table", "composition ∘^" + std::to_string(k) + "_" +
                                   std::to_string(j) + " has an entry outside the cell set"});
      return;
    }
    const std::string where = triple(k, j, a, b);
    if (x_.face(k, j, Sign::Plus, a) != x_.face(k, j, Sign::Minus, b)) {
      out_.push_back({"composability", where + " is tabulated but t_j(a) != s_j(b)"});
      return;
    }
    expect_equal("position (i)", k - 1, x_.face(k, j, Sign::Minus, r),
                 x_.face(k, j, Sign::Minus, a), "s_j of " + where);
    expect_equal("position (i)", k - 1, x_.face(k, j, Sign::Plus, r),
                 x_.face(k, j, Sign::Plus, b), "t_j of " + where);
    for (int i = 1; i <= k; ++i) {
      if (i == j) continue;
      const int jj = i < j ? j - 1 : j;
      for (Sign s : {Sign::Minus, Sign::Plus}) {
        const int fa = x_.face(k, i, s, a);
        const int fb = x_.face(k, i, s, b);
        const int rhs = comp(k - 1, jj, fa, fb);
        const std::string rule = s == Sign::Minus ? "position (ii)" : "position (iii)";
        const std::string at = std::string(s == Sign::Minus ? "s_" : "t_") +
                               std::to_string(i) + " of " + where;
        if (rhs == kUndefined) {
          out_.push_back({rule, at + ": composite of the faces is not tabulated"});
        } else {
          expect_equal(rule, k - 1, x_.face(k, i, s, r), rhs, at);
        }
      }
    }
    // Associativity: (a∘b)∘c = a∘(b∘c).
    auto& left = by_left_[k][j - 1];
    if (auto it = left.find(b); it != left.end()) {
      for (const auto& [c, bc] : it->second) {
        expect_equal("associativity", k, comp(k, j, r, c), comp(k, j, a, bc),
                     "(" + where + ") ∘ " + name(k, c));
      }
    }
    // Interchange: (p∘_i q)∘_j (u∘_i v) = (p∘_j u)∘_i (q∘_j v).
    for (int i = 1; i <= k; ++i) {
      if (i == j) continue;
      auto& res = by_result_[k][i - 1];
      auto pa = res.find(a);
      auto pb = res.find(b);
      if (pa == res.end() || pb == res.end()) continue;
      for (const auto& [p, q] : pa->second) {
        for (const auto& [u, v] : pb->second) {
          const int rhs = comp(k, i, comp(k, j, p, u), comp(k, j, q, v));
          expect_equal("interchange", k, r, rhs,
                       "(" + triple(k, i, p, q) + ") ∘_" + std::to_string(j) + " (" +
                           triple(k, i, u, v) + ")");
        }
      }
    }
    if (k >= n) return;
    // Degeneracy distribution.
    for (int i = 1; i <= k + 1; ++i) {
      const int jj = i <= j ? j + 1 : j;
      expect_equal("degeneracy distribution", k + 1, degen(k, i, r),
                   comp(k + 1, jj, degen(k, i, a), degen(k, i, b)),
                   "1_" + std::to_string(i) + "(" + where + ")");
    }
    for (Sign g : {Sign::Minus, Sign::Plus}) {
      const std::string gs(1, sign_char(g));
      // Connection distribution, i != j.
      for (int i = 1; i <= k; ++i) {
        if (i == j) continue;
        const int jj = i < j ? j + 1 : j;
        expect_equal("connection distribution", k + 1, conn(k, g, i, r),
                     comp(k + 1, jj, conn(k, g, i, a), conn(k, g, i, b)),
                     "Γ^" + gs + "_" + std::to_string(i) + "(" + where + ")");
      }
      // Transport: columns along j, rows stacked along j+1.
      int A, B, C, D;
      if (g == Sign::Plus) {
        A = conn(k, g, j, a);
        B = degen(k, j, a);
        C = degen(k, j + 1, a);
        D = conn(k, g, j, b);
      } else {
        A = conn(k, g, j, a);
        B = degen(k, j + 1, b);
        C = degen(k, j, b);
        D = conn(k, g, j, b);
      }
      const int lhs = conn(k, g, j, r);
      const int matrix = comp(k + 1, j + 1, comp(k + 1, j, A, B), comp(k + 1, j, C, D));
      const int alt = comp(k + 1, j, comp(k + 1, j + 1, A, C), comp(k + 1, j + 1, B, D));
      const std::string rule = g == Sign::Plus ? "transport (iv)" : "transport (v)";
      expect_equal(rule, k + 1, lhs, matrix,
                   "Γ^" + gs + "_" + std::to_string(j) + "(" + where + ")");
      expect_equal(rule + " alternative reading", k + 1, matrix, alt,
                   "Γ^" + gs + "_" + std::to_string(j) + "(" + where + ")");
    }
  }

  void units() {
    for (int k = 1; k <= x_.truncation(); ++k) {
      for (int x = 0; x < x_.size(k); ++x) {
        for (int j = 1; j <= k; ++j) {
          const int u = degen(k - 1, j, x_.face(k, j, Sign::Minus, x));
          const int v = degen(k - 1, j, x_.face(k, j, Sign::Plus, x));
          const std::string jj = std::to_string(j);
          expect_equal("unit", k, comp(k, j, u, x), x, "1_" + jj + "(s_" + jj + " x) ∘ x");
          expect_equal("unit", k, comp(k, j, x, v), x, "x ∘ 1_" + jj + "(t_" + jj + " x)");
        }
      }
    }
  }

  void connection_composition() {
    for (int k = 1; k < x_.truncation(); ++k) {
      for (int x = 0; x < x_.size(k); ++x) {
        for (int i = 1; i <= k; ++i) {
          const int p = conn(k, Sign::Plus, i, x);
          const int m = conn(k, Sign::Minus, i, x);
          const std::string at = name(k, x) + ", i=" + std::to_string(i);
          expect_equal("connection composition (vi)", k + 1, comp(k + 1, i, p, m),
                       degen(k, i + 1, x), "Γ^+ ∘_i Γ^- at " + at);
          expect_equal("connection composition (vi)", k + 1, comp(k + 1, i + 1, p, m),
                       degen(k, i, x), "Γ^+ ∘_{i+1} Γ^- at " + at);
        }
      }
    }
  }

  const StrictInstance& c_;
  const TruncatedCubicalSet& x_;
  std::vector<std::vector<std::unordered_map<int, std::vector<std::pair<int, int>>>>> by_left_;
  std::vector<std::vector<std::unordered_map<int, std::vector<std::pair<int, int>>>>> by_result_;
  Report out_;
};

}  // namespace

Report check_strict_axioms(const StrictInstance& c) {
  if (static_cast<int>(c.comp.size()) != c.truncation() + 1) {
    return {{"table", "composition tables do not match the truncation"}};
  }
  Report tables = check_tables(c.cells, false);
  if (!tables.empty()) return tables;
  return Checker(c).run();
}

}  // namespace cubikit
