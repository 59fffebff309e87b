#pragma once

// Test-side transcription of the relation boxes of the cubical site, kept
// independent of the library's oriented rewrite table. Each relation is
// listed in the form it is printed, as an unordered pair of words.

#include <map>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "cubikit/site.hpp"

namespace oracle {

using cubikit::Generator;
using cubikit::Sign;
using cubikit::Variant;

struct Rel {
  std::vector<Generator> lhs;
  std::vector<Generator> rhs;
};

inline Generator s(int n, int j) { return Generator::face(Sign::Minus, n, j); }
inline Generator f(Sign x, int n, int j) { return Generator::face(x, n, j); }
inline Generator e(int n, int j) { return Generator::degeneracy(n, j); }
inline Generator c(Sign g, int n, int j) { return Generator::connection(g, n, j); }

// All relation instances whose generators have level <= max_level.
inline std::vector<Rel> relations(Variant v, int max_level) {
  std::vector<Rel> out;
  auto keep = [&](Rel r) {
    for (const auto& g : r.lhs)
      if (g.level > max_level) return;
    for (const auto& g : r.rhs)
      if (g.level > max_level) return;
    out.push_back(std::move(r));
  };
  const Sign signs[2] = {Sign::Minus, Sign::Plus};
  // Face box: sigma^{n-1}_i tau^n_j = tau^{n-1}_{j-1} sigma^n_i, i < j.
  for (int n = 2; n <= max_level; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (Sign a : signs)
          for (Sign b : signs)
            keep({{f(a, n - 1, i), f(b, n, j)}, {f(b, n - 1, j - 1), f(a, n, i)}});
  if (v == Variant::Plain) return out;

  for (int n = 1; n <= max_level; ++n) {
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        keep({{e(n + 1, i), e(n, j)}, {e(n + 1, j + 1), e(n, i)}});
    for (Sign a : signs) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i < j) keep({{f(a, n, i), e(n, j)}, {e(n - 1, j - 1), f(a, n - 1, i)}});
          if (j < i) keep({{f(a, n, i), e(n, j)}, {e(n - 1, j), f(a, n - 1, i - 1)}});
          if (i == j) keep({{f(a, n, i), e(n, j)}, {}});
        }
      }
    }
  }
  if (v != Variant::Reflexive) return out;

  for (Sign g : signs) {
    for (int n = 1; n <= max_level; ++n) {
      // Same-sign connections, i <= j (see the decisions note on (i)).
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j)
          keep({{c(g, n + 1, i), c(g, n, j)}, {c(g, n + 1, j + 1), c(g, n, i)}});
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i < j) keep({{c(g, n + 1, i), e(n, j)}, {e(n + 1, j + 1), c(g, n, i)}});
          if (j < i) keep({{c(g, n + 1, i), e(n, j)}, {e(n + 1, j), c(g, n, i - 1)}});
        }
        keep({{c(g, n + 1, i), e(n, i)}, {e(n + 1, i), e(n, i)}});
      }
      for (Sign a : signs) {
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= n - 1; ++j) {
            if (i < j)
              keep({{f(a, n, i), c(g, n, j)}, {c(g, n - 1, j - 1), f(a, n - 1, i)}});
            if (j + 1 < i)
              keep({{f(a, n, i), c(g, n, j)}, {c(g, n - 1, j), f(a, n - 1, i - 1)}});
          }
        }
      }
      for (int j = 1; j <= n - 1; ++j) {
        for (int i : {j, j + 1}) {
          keep({{f(Sign::Minus, n, i), c(Sign::Minus, n, j)}, {}});
          keep({{f(Sign::Plus, n, i), c(Sign::Plus, n, j)}, {}});
          keep({{f(Sign::Minus, n, i), c(Sign::Plus, n, j)},
                {e(n - 1, j), f(Sign::Minus, n - 1, j)}});
          keep({{f(Sign::Plus, n, i), c(Sign::Minus, n, j)},
                {e(n - 1, j), f(Sign::Plus, n - 1, j)}});
        }
      }
    }
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Every composable word of length <= max_len with levels <= max_level,
// partitioned by the congruence generated by the relations, restricted to
// steps that stay inside the bounded word set.
struct Closure {
  std::vector<cubikit::Word> words;
  std::vector<int> cls;
};

// Exact encoding for words of length <= 5 with levels and indices < 16.
inline std::uint64_t key(const cubikit::Word& w) {
  std::uint64_t k = static_cast<std::uint64_t>(w.dom);
  for (const auto& g : w.gens) {
    std::uint64_t code = (static_cast<std::uint64_t>(g.kind) * 2 + static_cast<std::uint64_t>(g.sign)) * 256 +
                         static_cast<std::uint64_t>(g.level) * 16 + static_cast<std::uint64_t>(g.index);
    k = (k << 11) | code;
  }
  return (k << 3) | w.gens.size();
}

inline Closure closure(Variant v, int max_level, int max_len) {
  std::vector<cubikit::Word> words;
  std::vector<cubikit::Word> layer;
  for (int d = 0; d <= max_level; ++d) layer.push_back(cubikit::Word::identity(d));
  words = layer;
  for (int k = 1; k <= max_len; ++k) {
    std::vector<cubikit::Word> next;
    for (const auto& u : layer) {
      for (const auto& g : cubikit::generators_from(u.cod, v, max_level)) {
        cubikit::Word w = u;
        w.cod = g.cod();
        w.gens.insert(w.gens.begin(), g);
        next.push_back(std::move(w));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::unordered_map<std::uint64_t, int> index;
  for (std::size_t p = 0; p < words.size(); ++p) index.emplace(key(words[p]), static_cast<int>(p));
  UnionFind uf(words.size());
  std::map<std::pair<Generator, Generator>, std::vector<std::vector<Generator>>> rels;
  for (auto& r : relations(v, max_level)) rels[{r.lhs[0], r.lhs[1]}].push_back(r.rhs);
  for (std::size_t p = 0; p < words.size(); ++p) {
    const auto& w = words[p];
    for (std::size_t q = 0; q + 1 < w.gens.size(); ++q) {
      auto found = rels.find({w.gens[q], w.gens[q + 1]});
      if (found == rels.end()) continue;
      for (const auto& rhs : found->second) {
        cubikit::Word u{w.dom, w.cod, {}};
        u.gens.insert(u.gens.end(), w.gens.begin(), w.gens.begin() + q);
        u.gens.insert(u.gens.end(), rhs.begin(), rhs.end());
        u.gens.insert(u.gens.end(), w.gens.begin() + q + 2, w.gens.end());
        auto it = index.find(key(u));
        if (it != index.end()) uf.unite(static_cast<int>(p), it->second);
      }
    }
  }
  Closure out{std::move(words), {}};
  out.cls.resize(out.words.size());
  for (std::size_t p = 0; p < out.words.size(); ++p) out.cls[p] = uf.find(static_cast<int>(p));
  return out;
}

}  // namespace oracle
