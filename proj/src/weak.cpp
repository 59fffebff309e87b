#include "cubikit/weak.hpp"

#include <algorithm>

#include "cubikit/fixtures.hpp"

namespace cubikit {

namespace {

using Kind = AdmissiblePairKind::Kind;

[[noreturn]] void outside(const Stretching& s, TermId t, const std::string& what) {
  throw OutOfUniverse("π(" + s.store->print(t) + "): " + what + " is not in the strict quotient");
}

}  // namespace

std::pair<int, int> Stretching::pi(TermId t) const {
  if (auto it = pi_cache_.find(t); it != pi_cache_.end()) return it->second;
  const TermNode n = store->node(t);
  const auto& tab = strict->tables;
  const auto& cells = tab.cells;
  std::pair<int, int> r{n.dim, kUndefined};
  switch (n.kind) {
    case TermKind::Gen:
      if (n.dim > strict->options.max_dim) outside(*this, t, "generator");
      r = strict->class_of(strict->store->gen(n.dim, n.index));
      break;
    case TermKind::Comp:
      r.second = tab.compose(n.dim, n.index, pi(n.a).second, pi(n.b).second);
      if (r.second == kUndefined) outside(*this, t, "composite");
      break;
    case TermKind::Degen:
    case TermKind::Bracket:
      r.second = cells.degeneracy(n.dim - 1, n.index, pi(n.a).second);
      if (r.second == kUndefined) outside(*this, t, "degeneracy");
      break;
    case TermKind::Conn:
    case TermKind::BracketConn:
      r.second = cells.connection(n.dim - 1, n.sign, n.index, pi(n.a).second);
      if (r.second == kUndefined) outside(*this, t, "connection");
      break;
    case TermKind::Rev:
      throw CapabilityError("stretchings carry no reversors");
  }
  pi_cache_.emplace(t, r);
  return r;
}

bool admissible(const Stretching& s, TermId a, TermId b, AdmissiblePairKind kind) {
  auto& st = *s.store;
  const int n = st.dim(a);
  if (st.dim(b) != n) return false;
  if (n == 0) return a == b;
  try {
    if (s.pi(a) != s.pi(b)) return false;
  } catch (const OutOfUniverse&) {
    return false;
  }
  if (kind.kind == Kind::Plain) return true;
  if (kind.j < 1 || kind.j > n) return false;
  const Sign side = kind.kind == Kind::Minus ? Sign::Minus : Sign::Plus;
  return st.face(a, side, kind.j) == st.face(b, side, kind.j);
}

std::vector<std::pair<TermId, TermId>> admissible_pairs(const Stretching& s, int n,
                                                         AdmissiblePairKind kind) {
  std::map<std::pair<int, int>, std::vector<TermId>> by_class;
  for (TermId t : s.terms) {
    if (s.store->dim(t) == n) by_class[s.pi(t)].push_back(t);
  }
  std::vector<std::pair<TermId, TermId>> out;
  for (const auto& [cls, group] : by_class)
    for (TermId a : group)
      for (TermId b : group)
        if (admissible(s, a, b, kind)) out.emplace_back(a, b);
  return out;
}

TermId mk_bracket(Stretching& s, TermId a, TermId b, int n, int j) {
  auto& st = *s.store;
  if (st.dim(a) != n || st.dim(b) != n) throw AdmissibilityError("bracket arguments must be " + std::to_string(n) + "-cells");
  if (j < 1 || j > n + 1) throw AdmissibilityError("bracket direction out of range 1..n+1");
  if (!admissible(s, a, b, {Kind::Plain, 0})) {
    throw AdmissibilityError(n == 0 ? "0-dimensional bracket needs equal cells"
                                    : "bracket arguments are not π-equal");
  }
  return st.bracket(j, a, b);
}

TermId mk_bracket_conn(Stretching& s, TermId a, TermId b, int n, Sign g, int j) {
  auto& st = *s.store;
  if (st.dim(a) != n || st.dim(b) != n || n < 1) {
    throw AdmissibilityError("connection bracket arguments must be " + std::to_string(n) +
                             "-cells with n >= 1");
  }
  if (j < 1 || j > n) throw AdmissibilityError("connection bracket direction out of range 1..n");
  if (!admissible(s, a, b, {Kind::Plain, 0})) {
    throw AdmissibilityError("connection bracket arguments are not π-equal");
  }
  if (st.face(a, g, j) != st.face(b, g, j)) {
    throw AdmissibilityError(std::string(g == Sign::Minus ? "sources" : "targets") +
                             " in direction " + std::to_string(j) + " differ");
  }
  return st.bracket_conn(g, j, a, b);
}

Stretching free_weak(std::shared_ptr<const TruncatedCubicalSet> x, const FreeWeakOptions& opt) {
  if (opt.max_dim < 0 || opt.depth < 1) {
    throw InputError("free_weak needs max_dim >= 0 and depth >= 1");
  }
  Stretching s;
  s.options = opt;
  s.store = std::make_shared<TermStore>(x);
  s.strict = std::make_shared<const QuotientStructure>(free_strict(
      x, {.max_dim = opt.max_dim, .depth = opt.strict_depth > 0 ? opt.strict_depth : opt.depth}));
  auto& st = *s.store;
  const int top = opt.max_dim;

  std::vector<std::vector<TermId>> all(top + 1);
  // (dim, direction) -> face -> terms with that j-source
  std::vector<std::vector<std::unordered_map<TermId, std::vector<TermId>>>> by_source(top + 1);
  for (int n = 1; n <= top; ++n) by_source[n].resize(n);
  std::vector<std::map<std::pair<int, int>, std::vector<TermId>>> by_pi(top + 1);

  std::vector<TermId> layer;
  for (int d = 0; d <= std::min(top, x->truncation()); ++d)
    for (int c = 0; c < x->size(d); ++c) layer.push_back(st.gen(d, c));

  for (int depth = 1;; ++depth) {
    for (TermId t : layer) {
      if (s.contains(t)) continue;
      std::pair<int, int> p;
      try {
        p = s.pi(t);
      } catch (const OutOfUniverse&) {
        ++s.tally["π outside the strict quotient"];
        continue;
      }
      const int n = st.dim(t);
      s.stored_.emplace(t, 1);
      s.terms.push_back(t);
      all[n].push_back(t);
      by_pi[n][p].push_back(t);
      for (int j = 1; j <= n; ++j) by_source[n][j - 1][st.face(t, Sign::Minus, j)].push_back(t);
    }
    if (s.terms.size() > opt.max_terms) {
      throw ResourceError("stretching exceeds " + std::to_string(opt.max_terms) +
                          " terms at depth " + std::to_string(depth));
    }
    if (depth >= opt.depth) break;
    layer.clear();
    auto is_new = [&](TermId t) { return st.depth(t) == depth; };
    for (int n = 0; n <= top; ++n) {
      for (TermId t : all[n]) {
        if (!is_new(t)) continue;
        if (n + 1 <= top) {
          for (int j = 1; j <= n + 1; ++j) layer.push_back(st.degen(j, t));
          for (int j = 1; j <= n; ++j) {
            layer.push_back(st.conn(Sign::Minus, j, t));
            layer.push_back(st.conn(Sign::Plus, j, t));
          }
        }
      }
    }
    for (int n = 1; n <= top; ++n) {
      for (int j = 1; j <= n; ++j) {
        const auto& idx = by_source[n][j - 1];
        for (TermId a : all[n]) {
          auto it = idx.find(st.face(a, Sign::Plus, j));
          if (it == idx.end()) continue;
          for (TermId b : it->second) {
            if (is_new(a) || is_new(b)) layer.push_back(st.comp(j, a, b));
          }
        }
      }
    }
    for (int n = 1; n + 1 <= top; ++n) {
      for (const auto& [cls, group] : by_pi[n]) {
        for (TermId a : group)
          for (TermId b : group) {
            if (a == b || !(is_new(a) || is_new(b))) continue;
            for (int j = 1; j <= n + 1; ++j) layer.push_back(st.bracket(j, a, b));
            if (!opt.connection_brackets) continue;
            for (int j = 1; j <= n; ++j) {
              const bool src = st.face(a, Sign::Minus, j) == st.face(b, Sign::Minus, j);
              const bool tgt = st.face(a, Sign::Plus, j) == st.face(b, Sign::Plus, j);
              if (src && tgt) {
                layer.push_back(st.bracket_conn(Sign::Minus, j, a, b));
                layer.push_back(st.bracket_conn(Sign::Plus, j, a, b));
              } else if (src || tgt) {
                ++s.tally["connection bracket with differing opposite face"];
              }
            }
          }
      }
    }
    if (s.terms.size() + layer.size() > opt.max_terms) {
      throw ResourceError("stretching exceeds " + std::to_string(opt.max_terms) +
                          " terms at depth " + std::to_string(depth + 1) + " (" +
                          std::to_string(s.terms.size() + layer.size()) + " generated)");
    }
    if (layer.empty()) break;
  }
  return s;
}

Report check_stretching(const Stretching& s) {
  Report out;
  auto& st = *s.store;
  const auto& cells = s.strict->tables.cells;
  for (TermId t : s.terms) {
    const TermNode n = st.node(t);
    const std::string name = st.print(t);
    std::pair<int, int> p;
    try {
      p = s.pi(t);
    } catch (const OutOfUniverse& e) {
      out.push_back({"π defined", e.what()});
      continue;
    }
    for (int i = 1; i <= n.dim; ++i)
      for (Sign g : {Sign::Minus, Sign::Plus}) {
        const TermId f = st.face(t, g, i);
        try {
          if (s.pi(f).second != cells.face(n.dim, i, g, p.second)) {
            out.push_back({"π commutes with faces", name + " in direction " + std::to_string(i)});
          }
        } catch (const OutOfUniverse& e) {
          out.push_back({"π defined", e.what()});
        }
      }
    switch (n.kind) {
      case TermKind::Comp:
        if (st.face(n.a, Sign::Plus, n.index) != st.face(n.b, Sign::Minus, n.index)) {
          out.push_back({"composability", name});
        }
        break;
      case TermKind::Bracket:
      case TermKind::BracketConn: {
        if (n.a == n.b) out.push_back({"bracket collapse", name + " has equal arguments"});
        if (s.pi(n.a) != s.pi(n.b)) out.push_back({"bracket admissibility", name});
        const int expect = n.kind == TermKind::Bracket
                               ? cells.degeneracy(n.dim - 1, n.index, s.pi(n.a).second)
                               : cells.connection(n.dim - 1, n.sign, n.index, s.pi(n.a).second);
        if (p.second != expect) out.push_back({"bracket projection", name});
        if (n.kind == TermKind::BracketConn &&
            st.face(n.a, n.sign, n.index) != st.face(n.b, n.sign, n.index)) {
          out.push_back({"bracket admissibility", name + " has differing faces on its side"});
        }
        break;
      }
      default:
        break;
    }
  }
  return out;
}

CoherenceDemo coherence_cells_demo(bool opposite) {
  auto x = std::make_shared<const TruncatedCubicalSet>(opposite ? fixtures::p3op()
                                                                : fixtures::p3());
  CoherenceDemo d{free_weak(x, {.max_dim = 2, .depth = 4}), 0, 0, {}};
  auto& s = d.stretching;
  auto& st = *s.store;
  if (opposite) {
    d.x = st.parse("comp{1,1}(comp{1,1}(gen(h),gen(g)),gen(f))");
    d.y = st.parse("comp{1,1}(gen(h),comp{1,1}(gen(g),gen(f)))");
  } else {
    d.x = st.parse("comp{1,1}(gen(f),comp{1,1}(gen(g),gen(h)))");
    d.y = st.parse("comp{1,1}(comp{1,1}(gen(f),gen(g)),gen(h))");
  }
  auto cell = [&](const std::string& name, TermId t, std::array<std::string, 4> figure) {
    CoherenceCell c;
    c.name = name;
    c.term = t;
    for (int i = 0; i < 4; ++i) c.faces[i] = st.face(t, i % 2 ? Sign::Plus : Sign::Minus, 1 + i / 2);
    c.figure = std::move(figure);
    return c;
  };
  d.cells[0] = cell("[x,y]^1_{2,1}", mk_bracket(s, d.x, d.y, 1, 1), {"x", "y", "1_src", "1_tgt"});
  d.cells[1] = cell("[x,y]^1_{2,2}", mk_bracket(s, d.x, d.y, 1, 2), {"1_src", "1_tgt", "x", "y"});
  d.cells[2] = cell("[x,y]^{1,-}_{2,1}", mk_bracket_conn(s, d.x, d.y, 1, Sign::Minus, 1),
                    {"x", "1_tgt", "y", "1_tgt"});
  d.cells[3] = cell("[x,y]^{1,+}_{2,1}", mk_bracket_conn(s, d.x, d.y, 1, Sign::Plus, 1),
                    {"1_src", "x", "1_src", "y"});
  return d;
}

namespace {

std::map<std::string, TermId> figure_symbols(const CoherenceDemo& d) {
  auto& st = *d.stretching.store;
  return {{"x", d.x},
          {"y", d.y},
          {"1_src", st.degen(1, st.face(d.x, Sign::Minus, 1))},
          {"1_tgt", st.degen(1, st.face(d.x, Sign::Plus, 1))}};
}

}  // namespace

Report check_coherence_demo(const CoherenceDemo& d) {
  Report out;
  const auto& s = d.stretching;
  auto& st = *s.store;
  const auto sym = figure_symbols(d);
  static const char* face_names[4] = {"s_1", "t_1", "s_2", "t_2"};
  for (const auto& c : d.cells) {
    if (!s.contains(c.term)) out.push_back({"coherence cell", c.name + " was not generated"});
    for (int i = 0; i < 4; ++i) {
      if (c.faces[i] != sym.at(c.figure[i])) {
        out.push_back({"coherence boundary", c.name + " " + face_names[i] + " = " +
                                                 st.print(c.faces[i]) + ", figure shows " +
                                                 c.figure[i]});
      }
    }
    const TermNode n = st.node(c.term);
    const auto px = s.pi(d.x).second;
    const auto& cells = s.strict->tables.cells;
    const int expect = n.kind == TermKind::Bracket ? cells.degeneracy(1, n.index, px)
                                                   : cells.connection(1, n.sign, n.index, px);
    if (s.pi(c.term).second != expect) out.push_back({"coherence projection", c.name});
  }
  return out;
}

std::string CoherenceDemo::table() const {
  auto& st = *stretching.store;
  const auto sym = figure_symbols(*this);
  std::map<TermId, std::string> names;
  for (const auto& [k, v] : sym) {
    std::string label = k;
    if (k == "1_src") label = "1_" + st.base().label(0, st.node(st.face(x, Sign::Minus, 1)).index);
    if (k == "1_tgt") label = "1_" + st.base().label(0, st.node(st.face(x, Sign::Plus, 1)).index);
    names[v] = label;
  }
  auto show = [&](TermId t) {
    auto it = names.find(t);
    return it == names.end() ? st.print(t) : it->second;
  };
  std::string out = "x = " + st.print(x) + "\ny = " + st.print(y) + "\n";
  out += "cell                 s_1(top)  t_1(bottom)  s_2(left)  t_2(right)\n";
  for (const auto& c : cells) {
    std::string line = c.name;
    line.resize(21, ' ');
    const int widths[4] = {10, 13, 11, 0};
    for (int i = 0; i < 4; ++i) {
      std::string f = show(c.faces[i]);
      if (widths[i] > 0 && static_cast<int>(f.size()) < widths[i]) f.resize(widths[i], ' ');
      else if (widths[i] > 0) f += ' ';
      line += f;
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace cubikit
