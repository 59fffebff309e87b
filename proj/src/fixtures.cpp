#include "cubikit/fixtures.hpp"

#include <algorithm>
#include <array>

namespace cubikit::fixtures {

namespace {

TruncatedCubicalSet path(const std::string& name, const std::vector<std::string>& points,
                         const std::vector<std::string>& edges, bool reversed) {
  TruncatedCubicalSet x(1, Variant::Plain);
  x.name = name;
  for (const auto& p : points) x.add_cell(0, p);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const int e = x.add_cell(1, edges[k]);
    const int from = static_cast<int>(reversed ? k + 1 : k);
    const int to = static_cast<int>(reversed ? k : k + 1);
    x.set_face(1, 1, Sign::Minus, e, from);
    x.set_face(1, 1, Sign::Plus, e, to);
  }
  return x;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

std::string square_label(int s1, int t1, int s2, int t2) {
  return "[" + std::to_string(s1) + "," + std::to_string(t1) + "," + std::to_string(s2) +
         "," + std::to_string(t2) + "]";
}

StrictInstance loop(int n, bool maximal) {
  if (n < 1) throw InputError("integer loop needs n >= 1");
  TruncatedCubicalSet x(2, Variant::Reflexive);
  x.name = maximal ? "integer-loop-maximal" : "integer-loop";
  x.add_cell(0, "*");
  for (int k = 0; k < n; ++k) x.add_cell(1, std::to_string(k));
  // 2-cells indexed by (s1, t1, s2); t2 is determined.
  auto sq = [n](int s1, int t1, int s2) { return (s1 * n + t1) * n + s2; };
  auto t2_of = [n](int s1, int t1, int s2) { return mod(s2 + t1 - s1, n); };
  std::vector<std::array<int, 4>> edges;
  for (int s1 = 0; s1 < n; ++s1)
    for (int t1 = 0; t1 < n; ++t1)
      for (int s2 = 0; s2 < n; ++s2) {
        const int t2 = t2_of(s1, t1, s2);
        x.add_cell(2, square_label(s1, t1, s2, t2));
        edges.push_back({s1, t1, s2, t2});
      }
  for (int k = 0; k < n; ++k) {
    x.set_face(1, 1, Sign::Minus, k, 0);
    x.set_face(1, 1, Sign::Plus, k, 0);
    x.set_degeneracy(1, 1, k, sq(k, k, 0));
    x.set_degeneracy(1, 2, k, sq(0, 0, k));
    x.set_connection(1, Sign::Minus, 1, k, sq(k, 0, k));
    x.set_connection(1, Sign::Plus, 1, k, sq(0, k, 0));
  }
  x.set_degeneracy(0, 1, 0, 0);
  for (int c = 0; c < x.size(2); ++c) {
    const auto& e = edges[c];
    x.set_face(2, 1, Sign::Minus, c, e[0]);
    x.set_face(2, 1, Sign::Plus, c, e[1]);
    x.set_face(2, 2, Sign::Minus, c, e[2]);
    x.set_face(2, 2, Sign::Plus, c, e[3]);
  }
  StrictInstance s(std::move(x));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) s.set_composite(1, 1, a, b, mod(a + b, n));
  for (int p = 0; p < static_cast<int>(edges.size()); ++p) {
    for (int q = 0; q < static_cast<int>(edges.size()); ++q) {
      const auto& a = edges[p];
      const auto& b = edges[q];
      if (a[1] == b[0]) {
        s.set_composite(2, 1, p, q, sq(a[0], b[1], mod(a[2] + b[2], n)));
      }
      if (a[3] == b[2]) {
        s.set_composite(2, 2, p, q, sq(mod(a[0] + b[0], n), mod(a[1] + b[1], n), a[2]));
      }
    }
  }
  ReversorTable r;
  r.m = 0;
  r.maps.resize(3);
  r.maps[1].assign(1, std::vector<int>(n));
  for (int k = 0; k < n; ++k) r.maps[1][0][k] = mod(-k, n);
  r.maps[2].assign(2, std::vector<int>(edges.size()));
  for (int c = 0; c < static_cast<int>(edges.size()); ++c) {
    const auto& e = edges[c];
    if (maximal) {
      const int neg = sq(mod(-e[0], n), mod(-e[1], n), mod(-e[2], n));
      r.maps[2][0][c] = neg;
      r.maps[2][1][c] = neg;
    } else {
      r.maps[2][0][c] = sq(e[1], e[0], mod(-e[2], n));
      r.maps[2][1][c] = sq(mod(-e[0], n), mod(-e[1], n), e[3]);
    }
  }
  s.reversors = std::move(r);
  return s;
}

}  // namespace

TruncatedCubicalSet p3() { return path("P3", {"a", "b", "c", "d"}, {"f", "g", "h"}, false); }

TruncatedCubicalSet p3op() {
  return path("P3op", {"a", "b", "c", "d"}, {"f", "g", "h"}, true);
}

TruncatedCubicalSet interval() { return path("interval", {"a", "b"}, {"f"}, false); }

TruncatedCubicalSet point(int n, Variant v) {
  TruncatedCubicalSet x(n, v);
  x.name = "point";
  for (int k = 0; k <= n; ++k) x.add_cell(k, "*");
  for (int k = 0; k <= n; ++k) {
    for (int j = 1; j <= k; ++j) {
      x.set_face(k, j, Sign::Minus, 0, 0);
      x.set_face(k, j, Sign::Plus, 0, 0);
    }
    if (k == n) continue;
    if (has_degeneracies(v))
      for (int j = 1; j <= k + 1; ++j) x.set_degeneracy(k, j, 0, 0);
    if (has_connections(v) && k >= 1)
      for (int j = 1; j <= k; ++j) {
        x.set_connection(k, Sign::Minus, j, 0, 0);
        x.set_connection(k, Sign::Plus, j, 0, 0);
      }
  }
  return x;
}

TruncatedCubicalSet product(const TruncatedCubicalSet& x, const TruncatedCubicalSet& y) {
  if (x.variant() != Variant::Plain || y.variant() != Variant::Plain) {
    throw CapabilityError("product is defined here for plain cubical sets only");
  }
  const int n = x.truncation() + y.truncation();
  TruncatedCubicalSet z(n, Variant::Plain);
  z.name = x.name + "*" + y.name;
  // cell ids per (p, a, q, b)
  std::vector<std::vector<std::vector<std::vector<int>>>> id(x.truncation() + 1);
  for (int p = 0; p <= x.truncation(); ++p) {
    id[p].resize(x.size(p));
    for (int a = 0; a < x.size(p); ++a) {
      id[p][a].resize(y.truncation() + 1);
      for (int q = 0; q <= y.truncation(); ++q) {
        for (int b = 0; b < y.size(q); ++b) {
          id[p][a][q].push_back(z.add_cell(p + q, x.label(p, a) + "*" + y.label(q, b)));
        }
      }
    }
  }
  for (int p = 0; p <= x.truncation(); ++p)
    for (int a = 0; a < x.size(p); ++a)
      for (int q = 0; q <= y.truncation(); ++q)
        for (int b = 0; b < y.size(q); ++b) {
          const int c = id[p][a][q][b];
          for (Sign s : {Sign::Minus, Sign::Plus}) {
            for (int i = 1; i <= p; ++i)
              z.set_face(p + q, i, s, c, id[p - 1][x.face(p, i, s, a)][q][b]);
            for (int i = 1; i <= q; ++i)
              z.set_face(p + q, p + i, s, c, id[p][a][q - 1][y.face(q, i, s, b)]);
          }
        }
  return z;
}

TruncatedCubicalSet grid2x2() {
  auto p2 = path("P2", {"0", "1", "2"}, {"x0", "x1"}, false);
  auto q2 = path("P2", {"0", "1", "2"}, {"y0", "y1"}, false);
  auto g = product(p2, q2);
  g.name = "grid2x2";
  return g;
}

StrictInstance integer_loop(int n) { return loop(n, false); }
StrictInstance integer_loop_maximal(int n) { return loop(n, true); }

StrictInstance symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  TruncatedCubicalSet x(1, Variant::Semireflexive);
  x.name = "S3";
  x.add_cell(0, "*");
  for (const auto& q : perms) {
    x.add_cell(1, "p" + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  }
  for (int k = 0; k < 6; ++k) {
    x.set_face(1, 1, Sign::Minus, k, 0);
    x.set_face(1, 1, Sign::Plus, k, 0);
  }
  x.set_degeneracy(0, 1, 0, 0);
  StrictInstance s(std::move(x));
  auto index = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  ReversorTable r;
  r.m = 0;
  r.maps.resize(2);
  r.maps[1].assign(1, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      // a then b: apply a first.
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[b][perms[a][i]];
      s.set_composite(1, 1, a, b, index(c));
    }
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[perms[a][i]] = i;
    r.maps[1][0][a] = index(inv);
  }
  s.reversors = std::move(r);
  return s;
}

StrictInstance interval_with_inverse() {
  TruncatedCubicalSet x(1, Variant::Semireflexive);
  x.name = "interval-inverse";
  const int a = x.add_cell(0, "a");
  const int b = x.add_cell(0, "b");
  const int f = x.add_cell(1, "f");
  const int fb = x.add_cell(1, "fbar");
  const int ia = x.add_cell(1, "1a");
  const int ib = x.add_cell(1, "1b");
  auto edge = [&](int e, int s, int t) {
    x.set_face(1, 1, Sign::Minus, e, s);
    x.set_face(1, 1, Sign::Plus, e, t);
  };
  edge(f, a, b);
  edge(fb, b, a);
  edge(ia, a, a);
  edge(ib, b, b);
  x.set_degeneracy(0, 1, a, ia);
  x.set_degeneracy(0, 1, b, ib);
  StrictInstance s(std::move(x));
  const int unit[2] = {ia, ib};
  const int src[4] = {a, b, a, b};
  const int tgt[4] = {b, a, a, b};
  const int cells[4] = {f, fb, ia, ib};
  for (int p : cells)
    for (int q : cells) {
      if (tgt[p - f] != src[q - f]) continue;
      int c;
      if (p == ia || p == ib) {
        c = q;
      } else if (q == ia || q == ib) {
        c = p;
      } else {
        c = unit[src[p - f]];
      }
      s.set_composite(1, 1, p, q, c);
    }
  ReversorTable r;
  r.m = 0;
  r.maps.resize(2);
  r.maps[1] = {{fb, f, ia, ib}};
  s.reversors = std::move(r);
  return s;
}

TruncatedCubicalSet builtin(const std::string& name) {
  if (name == "p3") return p3();
  if (name == "p3op") return p3op();
  if (name == "interval") return interval();
  if (name == "point") return point(3);
  if (name == "grid") return grid2x2();
  if (name == "cube2") return standard_cube(2);
  if (name == "cube3") return standard_cube(3);
  if (name == "interval-degenerate") {
    auto x = free_reflexive(interval(), 2, Variant::Semireflexive);
    x.name = "interval-degenerate";
    return x;
  }
  if (name == "interval-reflexive") {
    auto x = free_reflexive(interval(), 2, Variant::Reflexive);
    x.name = "interval-reflexive";
    return x;
  }
  if (name == "integer-loop" || name == "integer-loop-maximal" || name == "s3" ||
      name == "interval-inverse") {
    return builtin_instance(name).cells;
  }
  throw InputError("unknown builtin fixture '" + name + "'");
}

StrictInstance builtin_instance(const std::string& name) {
  if (name == "integer-loop") return integer_loop(3);
  if (name == "integer-loop-maximal") return integer_loop_maximal(3);
  if (name == "s3") return symmetric_group3();
  if (name == "interval-inverse") return interval_with_inverse();
  return StrictInstance(builtin(name));
}

std::vector<std::string> builtin_names() {
  return {"p3",    "p3op",  "interval", "point",  "grid",
          "cube2", "cube3", "interval-degenerate", "interval-reflexive",
          "integer-loop", "integer-loop-maximal", "s3", "interval-inverse"};
}

}  // namespace cubikit::fixtures
