#include "cubikit/cubical_set.hpp"

#include <map>
#include <set>

namespace cubikit {

TruncatedCubicalSet::TruncatedCubicalSet(int truncation, Variant variant)
    : truncation_(truncation), variant_(variant) {
  if (truncation < 0) throw InputError("truncation must be non-negative");
  labels_.resize(truncation + 1);
  index_.resize(truncation + 1);
  faces_.resize(truncation + 1);
  degeneracies_.resize(truncation + 1);
  connections_.resize(truncation + 1);
  for (int k = 1; k <= truncation; ++k) faces_[k].resize(k);
  for (int k = 0; k < truncation; ++k) degeneracies_[k].resize(k + 1);
  for (int k = 1; k < truncation; ++k) connections_[k].resize(k);
}

void TruncatedCubicalSet::check_dim(int dim) const {
  if (dim < 0 || dim > truncation_) {
    throw InputError("dimension " + std::to_string(dim) + " outside 0.." +
                     std::to_string(truncation_));
  }
}

int TruncatedCubicalSet::add_cell(int dim, const std::string& label) {
  check_dim(dim);
  if (index_[dim].count(label)) {
    throw InputError("duplicate cell label '" + label + "' in dimension " +
                     std::to_string(dim));
  }
  const int id = static_cast<int>(labels_[dim].size());
  labels_[dim].push_back(label);
  index_[dim].emplace(label, id);
  for (auto& row : faces_[dim])
    for (auto& m : row) m.push_back(kUndefined);
  for (auto& m : degeneracies_[dim]) m.push_back(kUndefined);
  for (auto& row : connections_[dim])
    for (auto& m : row) m.push_back(kUndefined);
  return id;
}

int TruncatedCubicalSet::size(int dim) const {
  if (dim < 0 || dim > truncation_) return 0;
  return static_cast<int>(labels_[dim].size());
}

const std::string& TruncatedCubicalSet::label(int dim, int cell) const {
  check_dim(dim);
  return labels_[dim].at(cell);
}

int TruncatedCubicalSet::find(int dim, const std::string& label) const {
  if (dim < 0 || dim > truncation_) return kUndefined;
  auto it = index_[dim].find(label);
  return it == index_[dim].end() ? kUndefined : it->second;
}

const std::vector<int>& TruncatedCubicalSet::face_row(int k, int j, Sign s) const {
  if (k < 1 || k > truncation_ || j < 1 || j > k) {
    throw InputError("no face s/t^" + std::to_string(k) + "_" + std::to_string(j));
  }
  return faces_[k][j - 1][sign_index(s)];
}

const std::vector<int>& TruncatedCubicalSet::degeneracy_row(int k, int j) const {
  if (k < 0 || k >= truncation_ || j < 1 || j > k + 1) {
    throw InputError("no degeneracy 1^" + std::to_string(k) + "_" +
                     std::to_string(k + 1) + "," + std::to_string(j));
  }
  return degeneracies_[k][j - 1];
}

const std::vector<int>& TruncatedCubicalSet::connection_row(int k, Sign g, int j) const {
  if (k < 1 || k >= truncation_ || j < 1 || j > k) {
    throw InputError("no connection at dimension " + std::to_string(k) +
                     ", index " + std::to_string(j));
  }
  return connections_[k][j - 1][sign_index(g)];
}

int TruncatedCubicalSet::face(int k, int j, Sign s, int x) const {
  return face_row(k, j, s).at(x);
}
int TruncatedCubicalSet::degeneracy(int k, int j, int x) const {
  return degeneracy_row(k, j).at(x);
}
int TruncatedCubicalSet::connection(int k, Sign g, int j, int x) const {
  return connection_row(k, g, j).at(x);
}

void TruncatedCubicalSet::set_face(int k, int j, Sign s, int x, int y) {
  face_row(k, j, s);
  faces_[k][j - 1][sign_index(s)].at(x) = y;
}
void TruncatedCubicalSet::set_degeneracy(int k, int j, int x, int y) {
  degeneracy_row(k, j);
  degeneracies_[k][j - 1].at(x) = y;
}
void TruncatedCubicalSet::set_connection(int k, Sign g, int j, int x, int y) {
  connection_row(k, g, j);
  connections_[k][j - 1][sign_index(g)].at(x) = y;
}

bool TruncatedCubicalSet::operator==(const TruncatedCubicalSet& o) const {
  return name == o.name && truncation_ == o.truncation_ && variant_ == o.variant_ &&
         labels_ == o.labels_ && faces_ == o.faces_ &&
         degeneracies_ == o.degeneracies_ && connections_ == o.connections_;
}

namespace {

void check_row(Report& out, const std::string& what, const std::vector<int>& row,
               int target_size, bool require_total) {
  for (std::size_t x = 0; x < row.size(); ++x) {
    if (row[x] == kUndefined) {
      if (require_total) out.push_back({"table", what + " undefined at cell #" + std::to_string(x)});
    } else if (row[x] < 0 || row[x] >= target_size) {
      out.push_back({"table", what + " maps cell #" + std::to_string(x) +
                                  " outside the target set"});
    }
  }
}

// Partial evaluation; kUndefined on any missing entry.
int eval(const TruncatedCubicalSet& x, const Word& w, int cell) {
  int c = cell;
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
    const Generator& g = *it;
    switch (g.kind) {
      case Generator::Kind::Face:
        c = x.face(g.level, g.index, g.sign, c);
        break;
      case Generator::Kind::Degeneracy:
        c = x.degeneracy(g.level - 1, g.index, c);
        break;
      case Generator::Kind::Connection:
        c = x.connection(g.level - 1, g.sign, g.index, c);
        break;
    }
    if (c == kUndefined) return kUndefined;
  }
  return c;
}

std::string cell_name(const TruncatedCubicalSet& x, int dim, int c) {
  return c == kUndefined ? std::string("?") : x.label(dim, c);
}

}  // namespace

Report check_tables(const TruncatedCubicalSet& x, bool require_total) {
  Report out;
  const int n = x.truncation();
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= k; ++j) {
      for (Sign s : {Sign::Minus, Sign::Plus}) {
        check_row(out,
                  std::string(s == Sign::Minus ? "s" : "t") + "^" + std::to_string(k) +
                      "_" + std::to_string(j),
                  x.face_row(k, j, s), x.size(k - 1), require_total);
      }
    }
  }
  if (has_degeneracies(x.variant())) {
    for (int k = 0; k < n; ++k) {
      for (int j = 1; j <= k + 1; ++j) {
        check_row(out, "1^" + std::to_string(k) + "_" + std::to_string(j),
                  x.degeneracy_row(k, j), x.size(k + 1), require_total);
      }
    }
  }
  if (has_connections(x.variant())) {
    for (int k = 1; k < n; ++k) {
      for (int j = 1; j <= k; ++j) {
        for (Sign g : {Sign::Minus, Sign::Plus}) {
          check_row(out,
                    "1^{" + std::to_string(k) + "," + sign_char(g) + "}_" +
                        std::to_string(j),
                    x.connection_row(k, g, j), x.size(k + 1), require_total);
        }
      }
    }
  }
  return out;
}

Report validate(const TruncatedCubicalSet& x, bool require_total) {
  Report out = check_tables(x, require_total);
  if (!out.empty()) return out;
  for (const auto& r : relation_instances(x.variant(), x.truncation())) {
    for (int c = 0; c < x.size(r.lhs.dom); ++c) {
      const int a = eval(x, r.lhs, c);
      const int b = eval(x, r.rhs, c);
      if (a == kUndefined || b == kUndefined || a == b) continue;
      out.push_back({r.origin, to_string(r.lhs) + " = " + to_string(r.rhs) + " fails at " +
                                   x.label(r.lhs.dom, c) + ": " +
                                   cell_name(x, r.lhs.cod, a) + " vs " +
                                   cell_name(x, r.lhs.cod, b)});
    }
  }
  return out;
}

int act(const TruncatedCubicalSet& x, const Word& w, int cell) {
  check_variant(w, x.variant());
  if (w.dom > x.truncation() || w.cod > x.truncation() || w.max_level() > x.truncation()) {
    throw InputError("word " + to_string(w) + " leaves the truncation " +
                     std::to_string(x.truncation()));
  }
  if (cell < 0 || cell >= x.size(w.dom)) {
    throw InputError("cell #" + std::to_string(cell) + " is not a " +
                     std::to_string(w.dom) + "-cell");
  }
  const int r = eval(x, w, cell);
  if (r == kUndefined) {
    throw Error("structure map undefined along " + to_string(w) + " from " +
                x.label(w.dom, cell));
  }
  return r;
}

TruncatedCubicalSet standard_cube(int n) {
  if (n < 0) throw InputError("cube dimension must be non-negative");
  TruncatedCubicalSet x(n, Variant::Plain);
  x.name = "cube" + std::to_string(n);
  int total = 1;
  for (int k = 0; k < n; ++k) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::string label(n, '*');
    int c = code;
    int stars = 0;
    for (int p = 0; p < n; ++p) {
      label[p] = "-+*"[c % 3];
      stars += c % 3 == 2;
      c /= 3;
    }
    x.add_cell(stars, label);
  }
  for (int k = 1; k <= n; ++k) {
    for (int c = 0; c < x.size(k); ++c) {
      const std::string& label = x.label(k, c);
      int j = 0;
      for (int p = 0; p < n; ++p) {
        if (label[p] != '*') continue;
        ++j;
        for (Sign s : {Sign::Minus, Sign::Plus}) {
          std::string f = label;
          f[p] = sign_char(s);
          x.set_face(k, j, s, c, x.find(k - 1, f));
        }
      }
    }
  }
  return x;
}

TruncatedCubicalSet free_reflexive(const TruncatedCubicalSet& base, int n, Variant v) {
  if (v == Variant::Plain) throw InputError("free_reflexive needs degeneracies");
  if (base.variant() != Variant::Plain) {
    throw CapabilityError("free_reflexive expects a plain cubical set");
  }
  TruncatedCubicalSet x(n, v);
  x.name = base.name;
  // cells_[k] : (raising normal word, dim of base cell, base cell)
  struct Cell {
    Word w;
    int base;
  };
  std::vector<std::vector<Cell>> cells(n + 1);
  std::vector<std::map<std::pair<Word, int>, int>> lookup(n + 1);
  for (int k = 0; k <= n; ++k) {
    for (int m = 0; m <= std::min(k, base.truncation()); ++m) {
      auto hom = enumerate_hom(m, k, v, k - m);
      for (const auto& w : hom.classes) {
        if (static_cast<int>(w.length()) != k - m) continue;
        for (int b = 0; b < base.size(m); ++b) {
          std::string label = base.label(m, b);
          if (!w.gens.empty()) label = to_string(w) + "(" + label + ")";
          lookup[k][{w, b}] = x.add_cell(k, label);
          cells[k].push_back({w, b});
        }
      }
    }
  }
  // Resolves g ∘ w applied to b into a stored cell.
  auto resolve = [&](const Generator& g, const Cell& c) {
    Word gw = c.w;
    gw.gens.insert(gw.gens.begin(), g);
    gw.cod = g.cod();
    Word nf = normalize(gw, v);
    std::size_t split = 0;
    while (split < nf.gens.size() && nf.gens[split].raising()) ++split;
    Word lower{nf.dom, nf.dom, {}};
    lower.gens.assign(nf.gens.begin() + static_cast<std::ptrdiff_t>(split), nf.gens.end());
    if (!lower.gens.empty()) lower.cod = lower.gens.front().cod();
    const int b = act(base, lower, c.base);
    Word upper{lower.cod, nf.cod, {}};
    upper.gens.assign(nf.gens.begin(), nf.gens.begin() + static_cast<std::ptrdiff_t>(split));
    return lookup[nf.cod].at({upper, b});
  };
  for (int k = 0; k <= n; ++k) {
    for (int c = 0; c < x.size(k); ++c) {
      for (int j = 1; j <= k; ++j)
        for (Sign s : {Sign::Minus, Sign::Plus})
          x.set_face(k, j, s, c, resolve(Generator::face(s, k, j), cells[k][c]));
      if (k == n) continue;
      for (int j = 1; j <= k + 1; ++j)
        x.set_degeneracy(k, j, c, resolve(Generator::degeneracy(k + 1, j), cells[k][c]));
      if (has_connections(v) && k >= 1) {
        for (int j = 1; j <= k; ++j)
          for (Sign g : {Sign::Minus, Sign::Plus})
            x.set_connection(k, g, j, c,
                             resolve(Generator::connection(g, k + 1, j), cells[k][c]));
      }
    }
  }
  return x;
}

DimensionReport dimension_report(const TruncatedCubicalSet& x) {
  if (!has_degeneracies(x.variant())) {
    throw CapabilityError("dimension_report needs degeneracy tables");
  }
  const int n = x.truncation();
  DimensionReport rep;
  rep.truncation = n;
  const bool conn = has_connections(x.variant());
  if (conn) rep.p_connections = 0;
  for (int q = 1; q <= n; ++q) {
    std::vector<char> degen(x.size(q), 0);
    std::vector<char> connected(x.size(q), 0);
    for (int j = 1; j <= q; ++j) {
      for (int y : x.degeneracy_row(q - 1, j))
        if (y != kUndefined) degen[y] = 1;
    }
    if (conn && q >= 2) {
      for (int j = 1; j <= q - 1; ++j)
        for (Sign g : {Sign::Minus, Sign::Plus})
          for (int y : x.connection_row(q - 1, g, j))
            if (y != kUndefined) connected[y] = 1;
    }
    for (int c = 0; c < x.size(q); ++c) {
      if (!degen[c]) rep.p_reflexions = q;
      if (conn && q >= 2 && !connected[c]) rep.p_connections = q;
      if (!degen[c] && !connected[c]) rep.p = q;
    }
  }
  rep.saturated = rep.p == n && n > 0;
  return rep;
}

}  // namespace cubikit
