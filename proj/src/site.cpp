#include "cubikit/site.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

namespace cubikit {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Plain:
      return "plain";
    case Variant::Semireflexive:
      return "semireflexive";
    case Variant::Reflexive:
      return "reflexive";
  }
  return "?";
}

Variant parse_variant(const std::string& name) {
  if (name == "plain") return Variant::Plain;
  if (name == "semireflexive") return Variant::Semireflexive;
  if (name == "reflexive") return Variant::Reflexive;
  throw InputError("unknown variant '" + name +
                   "' (expected plain, semireflexive or reflexive)");
}

bool Generator::valid() const {
  switch (kind) {
    case Kind::Face:
    case Kind::Degeneracy:
      return level >= 1 && index >= 1 && index <= level;
    case Kind::Connection:
      return level >= 2 && index >= 1 && index <= level - 1;
  }
  return false;
}

Variant Generator::required_variant() const {
  switch (kind) {
    case Kind::Face:
      return Variant::Plain;
    case Kind::Degeneracy:
      return Variant::Semireflexive;
    case Kind::Connection:
      return Variant::Reflexive;
  }
  return Variant::Reflexive;
}

std::string to_string(const Generator& g) {
  std::string head;
  switch (g.kind) {
    case Generator::Kind::Face:
      head = g.sign == Sign::Minus ? "s" : "t";
      break;
    case Generator::Kind::Degeneracy:
      head = "e";
      break;
    case Generator::Kind::Connection:
      head = g.sign == Sign::Minus ? "cm" : "cp";
      break;
  }
  return head + "{" + std::to_string(g.level) + "," + std::to_string(g.index) +
         "}";
}

Word Word::of(std::vector<Generator> gens) {
  if (gens.empty()) {
    throw CompositionError("empty generator list has no domain; use identity");
  }
  for (const auto& g : gens) {
    if (!g.valid()) throw CompositionError("invalid generator " + to_string(g));
  }
  for (std::size_t p = 0; p + 1 < gens.size(); ++p) {
    if (gens[p].dom() != gens[p + 1].cod()) {
      throw CompositionError("cannot compose " + to_string(gens[p]) + " after " +
                             to_string(gens[p + 1]) + ": dimension " +
                             std::to_string(gens[p + 1].cod()) + " vs " +
                             std::to_string(gens[p].dom()));
    }
  }
  Word w;
  w.dom = gens.back().dom();
  w.cod = gens.front().cod();
  w.gens = std::move(gens);
  return w;
}

int Word::max_level() const {
  int m = 0;
  for (const auto& g : gens) m = std::max(m, g.level);
  return m;
}

Word compose(const Word& outer, const Word& inner) {
  if (inner.cod != outer.dom) {
    throw CompositionError("cannot compose " + to_string(outer) + " after " +
                           to_string(inner) + ": codomain " +
                           std::to_string(inner.cod) + " is not domain " +
                           std::to_string(outer.dom));
  }
  Word w{inner.dom, outer.cod, outer.gens};
  w.gens.insert(w.gens.end(), inner.gens.begin(), inner.gens.end());
  return w;
}

std::string to_string(const Word& w) {
  if (w.gens.empty()) return "id{" + std::to_string(w.dom) + "}";
  std::string out;
  for (std::size_t p = 0; p < w.gens.size(); ++p) {
    if (p) out += '.';
    out += to_string(w.gens[p]);
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    int line = 1;
    int column = 1;
    for (std::size_t k = 0; k < at && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(msg, line, column);
  }
  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'", pos);
  }
  int number() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) fail("expected a number", start);
    if (pos - start > 6) fail("number too large", start);
    return std::stoi(text.substr(start, pos - start));
  }
  std::string ident() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
      ++pos;
    return text.substr(start, pos - start);
  }
};

}  // namespace

Word parse_word(const std::string& text) {
  Cursor c{text};
  c.skip_space();
  std::size_t start = c.pos;
  std::string head = c.ident();
  if (head == "id") {
    c.expect('{');
    int n = c.number();
    c.expect('}');
    c.skip_space();
    if (c.pos != text.size()) c.fail("trailing input", c.pos);
    return Word::identity(n);
  }
  std::vector<Generator> gens;
  for (;;) {
    Generator g;
    if (head == "s" || head == "t") {
      g.kind = Generator::Kind::Face;
      g.sign = head == "s" ? Sign::Minus : Sign::Plus;
    } else if (head == "e") {
      g.kind = Generator::Kind::Degeneracy;
    } else if (head == "cm" || head == "cp") {
      g.kind = Generator::Kind::Connection;
      g.sign = head == "cm" ? Sign::Minus : Sign::Plus;
    } else {
      c.fail("unknown generator '" + head + "'", start);
    }
    c.expect('{');
    g.level = c.number();
    c.expect(',');
    g.index = c.number();
    c.expect('}');
    if (!g.valid()) c.fail("generator " + to_string(g) + " out of range", start);
    if (!gens.empty() && gens.back().dom() != g.cod()) {
      c.fail("generator " + to_string(g) + " does not compose with " +
                 to_string(gens.back()),
             start);
    }
    gens.push_back(g);
    c.skip_space();
    if (c.pos == text.size()) break;
    c.expect('.');
    c.skip_space();
    start = c.pos;
    head = c.ident();
  }
  return Word::of(std::move(gens));
}

namespace {

using G = Generator;
using K = Generator::Kind;

const char* face_face_origin(Sign outer, Sign inner) {
  if (outer == Sign::Minus)
    return inner == Sign::Minus ? "faces (i)" : "faces (ii)";
  return inner == Sign::Minus ? "faces (iii)" : "faces (iv)";
}

}  // namespace

std::optional<PairRewrite> rewrite_pair(const Generator& o, const Generator& in,
                                        Variant v) {
  // Faces commute towards decreasing index: normal face words have
  // non-increasing indices read outermost first.
  if (o.kind == K::Face && in.kind == K::Face) {
    if (o.index < in.index) {
      return PairRewrite{{G::face(in.sign, o.level, in.index - 1),
                          G::face(o.sign, in.level, o.index)},
                         face_face_origin(o.sign, in.sign)};
    }
    return std::nullopt;
  }
  if (!has_degeneracies(v)) return std::nullopt;

  if (o.kind == K::Degeneracy && in.kind == K::Degeneracy) {
    if (o.index <= in.index) {
      return PairRewrite{{G::degeneracy(o.level, in.index + 1),
                          G::degeneracy(in.level, o.index)},
                         "degeneracies (i)"};
    }
    return std::nullopt;
  }
  if (o.kind == K::Face && in.kind == K::Degeneracy) {
    const int n = o.level;
    const int i = o.index;
    const int j = in.index;
    if (i < j) {
      return PairRewrite{{G::degeneracy(n - 1, j - 1), G::face(o.sign, n - 1, i)},
                         o.sign == Sign::Minus ? "degeneracies (ii) [s]"
                                               : "degeneracies (ii) [t]"};
    }
    if (j < i) {
      return PairRewrite{{G::degeneracy(n - 1, j), G::face(o.sign, n - 1, i - 1)},
                         o.sign == Sign::Minus ? "degeneracies (iii) [s]"
                                               : "degeneracies (iii) [t]"};
    }
    return PairRewrite{{},
                       o.sign == Sign::Minus ? "degeneracies (iv) [s]"
                                             : "degeneracies (iv) [t]"};
  }
  if (!has_connections(v)) return std::nullopt;

  if (o.kind == K::Connection && in.kind == K::Connection) {
    if (o.sign == in.sign && o.index <= in.index) {
      return PairRewrite{{G::connection(o.sign, o.level, in.index + 1),
                          G::connection(o.sign, in.level, o.index)},
                         o.index < in.index ? "connections (i)"
                                            : "connections (ii)"};
    }
    return std::nullopt;
  }
  if (o.kind == K::Connection && in.kind == K::Degeneracy) {
    const int i = o.index;
    const int j = in.index;
    if (i < j) {
      return PairRewrite{{G::degeneracy(o.level, j + 1),
                          G::connection(o.sign, in.level, i)},
                         "connections (iii)"};
    }
    if (j < i) {
      return PairRewrite{{G::degeneracy(o.level, j),
                          G::connection(o.sign, in.level, i - 1)},
                         "connections (iii)"};
    }
    return PairRewrite{{G::degeneracy(o.level, j), G::degeneracy(in.level, j)},
                       "connections (iv)"};
  }
  if (o.kind == K::Face && in.kind == K::Connection) {
    const int n = o.level;
    const int i = o.index;
    const int j = in.index;
    if (i < j) {
      return PairRewrite{{G::connection(in.sign, n - 1, j - 1),
                          G::face(o.sign, n - 1, i)},
                         "connections (v)"};
    }
    if (i > j + 1) {
      return PairRewrite{{G::connection(in.sign, n - 1, j),
                          G::face(o.sign, n - 1, i - 1)},
                         "connections (v)"};
    }
    if (o.sign == in.sign) return PairRewrite{{}, "connections (vi)"};
    return PairRewrite{{G::degeneracy(n - 1, j), G::face(o.sign, n - 1, j)},
                       in.sign == Sign::Plus ? "connections (vii)"
                                             : "connections (viii)"};
  }
  return std::nullopt;
}

std::size_t default_step_budget() {
  if (const char* env = std::getenv("CUBIKIT_STEP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

void check_variant(const Word& w, Variant v) {
  for (const auto& g : w.gens) {
    if (!g.valid()) throw CompositionError("invalid generator " + to_string(g));
    if (static_cast<int>(g.required_variant()) > static_cast<int>(v)) {
      throw CapabilityError("generator " + to_string(g) + " is not available in the " +
                            variant_name(v) + " site");
    }
  }
}

Word normalize(const Word& w, Variant v) {
  return normalize(w, v, default_step_budget());
}

Word normalize(const Word& w, Variant v, std::size_t budget) {
  check_variant(w, v);
  std::vector<Generator> g = w.gens;
  std::size_t steps = 0;
  std::size_t p = 0;
  while (p + 1 < g.size()) {
    auto r = rewrite_pair(g[p], g[p + 1], v);
    if (!r) {
      ++p;
      continue;
    }
    if (++steps > budget) {
      throw BudgetExceeded("rewrite budget of " + std::to_string(budget) +
                               " steps exhausted",
                           to_string(Word{w.dom, w.cod, g}));
    }
    g.erase(g.begin() + static_cast<std::ptrdiff_t>(p),
            g.begin() + static_cast<std::ptrdiff_t>(p) + 2);
    g.insert(g.begin() + static_cast<std::ptrdiff_t>(p), r->replacement.begin(),
             r->replacement.end());
    p = p > 0 ? p - 1 : 0;
  }
  return Word{w.dom, w.cod, std::move(g)};
}

bool is_normal(const Word& w, Variant v) {
  for (std::size_t p = 0; p + 1 < w.gens.size(); ++p) {
    if (rewrite_pair(w.gens[p], w.gens[p + 1], v)) return false;
  }
  return true;
}

bool words_equal(const Word& a, const Word& b, Variant v) {
  if (a.dom != b.dom || a.cod != b.cod) return false;
  return normalize(a, v) == normalize(b, v);
}

std::vector<Generator> generators_from(int dom, Variant v, int max_level) {
  std::vector<Generator> out;
  if (dom >= 1 && dom <= max_level) {
    for (int j = 1; j <= dom; ++j) {
      out.push_back(G::face(Sign::Minus, dom, j));
      out.push_back(G::face(Sign::Plus, dom, j));
    }
  }
  if (has_degeneracies(v) && dom + 1 <= max_level) {
    for (int j = 1; j <= dom + 1; ++j) out.push_back(G::degeneracy(dom + 1, j));
  }
  if (has_connections(v) && dom >= 1 && dom + 1 <= max_level) {
    for (int j = 1; j <= dom; ++j) {
      out.push_back(G::connection(Sign::Minus, dom + 1, j));
      out.push_back(G::connection(Sign::Plus, dom + 1, j));
    }
  }
  return out;
}

HomSet enumerate_hom(int m, int n, Variant v, int max_len) {
  if (m < 0 || n < 0 || max_len < 0) {
    throw InputError("enumerate_hom needs non-negative arguments");
  }
  const int level_cap = std::max(m, n) + max_len;
  std::set<Word> frontier{Word::identity(m)};
  std::set<Word> found;
  if (m == n) found.insert(Word::identity(m));
  HomSet out;
  out.previous_count = max_len == 0 ? 0 : found.size();
  for (int k = 1; k <= max_len; ++k) {
    std::set<Word> next;
    for (const auto& u : frontier) {
      for (const auto& g : generators_from(u.cod, v, level_cap)) {
        if (std::abs(g.cod() - n) > max_len - k) continue;
        Word w = u;
        w.cod = g.cod();
        w.gens.insert(w.gens.begin(), g);
        next.insert(normalize(w, v));
      }
    }
    frontier = std::move(next);
    if (k == max_len) out.previous_count = found.size();
    for (const auto& w : frontier) {
      if (w.cod == n) found.insert(w);
    }
  }
  out.classes.assign(found.begin(), found.end());
  out.stabilized = max_len > 0 && out.classes.size() == out.previous_count;
  return out;
}

namespace {

std::vector<Generator> all_generators(Variant v, int max_level) {
  std::vector<Generator> out;
  for (int d = 0; d <= max_level; ++d) {
    for (const auto& g : generators_from(d, v, max_level)) out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<RelationInstance> relation_instances(Variant v, int max_level) {
  std::vector<RelationInstance> out;
  for (const auto& inner : all_generators(v, max_level)) {
    for (const auto& outer : generators_from(inner.cod(), v, max_level)) {
      auto r = rewrite_pair(outer, inner, v);
      if (!r) continue;
      out.push_back({Word::of({outer, inner}),
                     Word{inner.dom(), outer.cod(), r->replacement}, r->origin});
    }
  }
  return out;
}

ConfluenceReport check_local_confluence(int max_level, int max_len, Variant v) {
  ConfluenceReport report;
  if (max_len < 3) return report;
  for (const auto& g3 : all_generators(v, max_level)) {
    for (const auto& g2 : generators_from(g3.cod(), v, max_level)) {
      auto r23 = rewrite_pair(g2, g3, v);
      if (!r23) continue;
      for (const auto& g1 : generators_from(g2.cod(), v, max_level)) {
        auto r12 = rewrite_pair(g1, g2, v);
        if (!r12) continue;
        ++report.examined;
        Word overlap = Word::of({g1, g2, g3});
        Word left{g3.dom(), g1.cod(), r12->replacement};
        left.gens.push_back(g3);
        Word right{g3.dom(), g1.cod(), {g1}};
        right.gens.insert(right.gens.end(), r23->replacement.begin(),
                          r23->replacement.end());
        Word ln = normalize(left, v);
        Word rn = normalize(right, v);
        if (ln != rn) report.unjoinable.push_back({overlap, ln, rn});
      }
    }
  }
  return report;
}

}  // namespace cubikit
