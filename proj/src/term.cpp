#include "cubikit/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace cubikit {

std::size_t TermStore::KeyHash::operator()(const TermNode& n) const {
  std::uint64_t h = static_cast<std::uint64_t>(n.kind);
  h = h * 1000003u ^ static_cast<std::uint64_t>(n.sign);
  h = h * 1000003u ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(n.index));
  h = h * 1000003u ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(n.dim));
  h = h * 1000003u ^ n.a;
  h = h * 1000003u ^ n.b;
  return static_cast<std::size_t>(h ^ (h >> 29));
}

TermStore::TermStore(std::shared_ptr<const TruncatedCubicalSet> base)
    : base_(std::move(base)) {
  if (!base_) throw InputError("term store needs a base cubical set");
}

TermId TermStore::intern(const TermNode& n) {
  auto it = ids_.find(n);
  if (it != ids_.end()) return it->second;
  const TermId id = static_cast<TermId>(nodes_.size());
  nodes_.push_back(n);
  ids_.emplace(n, id);
  return id;
}

TermId TermStore::gen(int dim, int cell) {
  if (cell < 0 || cell >= base_->size(dim)) {
    throw InputError("no generating " + std::to_string(dim) + "-cell #" +
                     std::to_string(cell));
  }
  TermNode n;
  n.kind = TermKind::Gen;
  n.index = cell;
  n.dim = dim;
  n.depth = 1;
  return intern(n);
}

TermId TermStore::comp(int j, TermId a, TermId b) {
  const int d = dim(a);
  if (dim(b) != d || d < 1 || j < 1 || j > d) {
    throw CompositionError("comp{" + std::to_string(d) + "," + std::to_string(j) +
                           "} needs two cells of the same positive dimension");
  }
  TermNode n;
  n.kind = TermKind::Comp;
  n.index = j;
  n.dim = d;
  n.depth = 1 + std::max(depth(a), depth(b));
  n.a = a;
  n.b = b;
  return intern(n);
}

TermId TermStore::degen(int j, TermId t) {
  const int d = dim(t);
  if (j < 1 || j > d + 1) {
    throw CompositionError("deg{" + std::to_string(j) + "} on a " + std::to_string(d) +
                           "-cell");
  }
  TermNode n;
  n.kind = TermKind::Degen;
  n.index = j;
  n.dim = d + 1;
  n.depth = 1 + depth(t);
  n.a = t;
  return intern(n);
}

TermId TermStore::conn(Sign g, int j, TermId t) {
  const int d = dim(t);
  if (d < 1 || j < 1 || j > d) {
    throw CompositionError(std::string("conn") + (g == Sign::Minus ? "m" : "p") + "{" +
                           std::to_string(j) + "} on a " + std::to_string(d) + "-cell");
  }
  TermNode n;
  n.kind = TermKind::Conn;
  n.sign = g;
  n.index = j;
  n.dim = d + 1;
  n.depth = 1 + depth(t);
  n.a = t;
  return intern(n);
}

TermId TermStore::rev(int j, TermId t) {
  const int d = dim(t);
  if (d < 1 || j < 1 || j > d) {
    throw CompositionError("rev{" + std::to_string(j) + "} on a " + std::to_string(d) +
                           "-cell");
  }
  TermNode n;
  n.kind = TermKind::Rev;
  n.index = j;
  n.dim = d;
  n.depth = 1 + depth(t);
  n.a = t;
  return intern(n);
}

TermId TermStore::bracket(int j, TermId a, TermId b) {
  const int d = dim(a);
  if (dim(b) != d || j < 1 || j > d + 1) {
    throw CompositionError("br{" + std::to_string(j) + "} needs two " +
                           std::to_string(d) + "-cells and 1 <= j <= n+1");
  }
  if (a == b) return degen(j, a);
  TermNode n;
  n.kind = TermKind::Bracket;
  n.index = j;
  n.dim = d + 1;
  n.depth = 1 + std::max(depth(a), depth(b));
  n.a = a;
  n.b = b;
  return intern(n);
}

TermId TermStore::bracket_conn(Sign g, int j, TermId a, TermId b) {
  const int d = dim(a);
  if (dim(b) != d || d < 1 || j < 1 || j > d) {
    throw CompositionError("connection bracket needs two cells of equal positive "
                           "dimension and 1 <= j <= n");
  }
  if (a == b) return conn(g, j, a);
  TermNode n;
  n.kind = TermKind::BracketConn;
  n.sign = g;
  n.index = j;
  n.dim = d + 1;
  n.depth = 1 + std::max(depth(a), depth(b));
  n.a = a;
  n.b = b;
  return intern(n);
}

TermId TermStore::face(TermId t, Sign s, int i) {
  const TermNode n = node(t);
  if (i < 1 || i > n.dim) {
    throw CompositionError("face index " + std::to_string(i) + " on a " +
                           std::to_string(n.dim) + "-cell");
  }
  const std::uint64_t key = (static_cast<std::uint64_t>(t) << 8) |
                            (static_cast<std::uint64_t>(sign_index(s)) << 7) |
                            static_cast<std::uint64_t>(i);
  if (auto it = faces_.find(key); it != faces_.end()) return it->second;
  const int j = n.index;
  TermId r = 0;
  switch (n.kind) {
    case TermKind::Gen: {
      const int c = base_->face(n.dim, i, s, n.index);
      if (c == kUndefined) throw Error("base face undefined for generator");
      r = gen(n.dim - 1, c);
      break;
    }
    case TermKind::Comp:
      if (i == j) {
        r = s == Sign::Minus ? face(n.a, s, j) : face(n.b, s, j);
      } else {
        const TermId fa = face(n.a, s, i);
        const TermId fb = face(n.b, s, i);
        r = comp(i < j ? j - 1 : j, fa, fb);
      }
      break;
    case TermKind::Degen:
      if (i == j) {
        r = n.a;
      } else if (i < j) {
        r = degen(j - 1, face(n.a, s, i));
      } else {
        r = degen(j, face(n.a, s, i - 1));
      }
      break;
    case TermKind::Conn:
      if (i < j) {
        r = conn(n.sign, j - 1, face(n.a, s, i));
      } else if (i > j + 1) {
        r = conn(n.sign, j, face(n.a, s, i - 1));
      } else if (s == n.sign) {
        r = n.a;
      } else {
        r = degen(j, face(n.a, s, j));
      }
      break;
    case TermKind::Rev:
      if (i == j) {
        r = face(n.a, flip(s), j);
      } else {
        r = rev(i < j ? j - 1 : j, face(n.a, s, i));
      }
      break;
    case TermKind::Bracket:
      if (i == j) {
        r = s == Sign::Minus ? n.a : n.b;
      } else if (i < j) {
        const TermId fa = face(n.a, s, i);
        r = bracket(j - 1, fa, face(n.b, s, i));
      } else {
        const TermId fa = face(n.a, s, i - 1);
        r = bracket(j, fa, face(n.b, s, i - 1));
      }
      break;
    case TermKind::BracketConn:
      if (i < j) {
        const TermId fa = face(n.a, s, i);
        r = bracket_conn(n.sign, j - 1, fa, face(n.b, s, i));
      } else if (i > j + 1) {
        const TermId fa = face(n.a, s, i - 1);
        r = bracket_conn(n.sign, j, fa, face(n.b, s, i - 1));
      } else if (s == n.sign) {
        r = i == j ? n.a : n.b;
      } else {
        const TermId fa = face(n.a, s, j);
        r = bracket(j, fa, face(n.b, s, j));
      }
      break;
  }
  faces_.emplace(key, r);
  return r;
}

bool TermStore::well_formed(TermId t) {
  if (auto it = well_formed_.find(t); it != well_formed_.end()) return it->second;
  const TermNode n = node(t);
  bool ok = true;
  switch (n.kind) {
    case TermKind::Gen:
      break;
    case TermKind::Comp:
      ok = well_formed(n.a) && well_formed(n.b) &&
           face(n.a, Sign::Plus, n.index) == face(n.b, Sign::Minus, n.index);
      break;
    case TermKind::Degen:
    case TermKind::Conn:
    case TermKind::Rev:
      ok = well_formed(n.a);
      break;
    case TermKind::Bracket:
    case TermKind::BracketConn:
      ok = well_formed(n.a) && well_formed(n.b);
      break;
  }
  well_formed_.emplace(t, ok);
  return ok;
}

int TermStore::compare(TermId x, TermId y) const {
  if (x == y) return 0;
  const TermNode& a = node(x);
  const TermNode& b = node(y);
  if (a.depth != b.depth) return a.depth < b.depth ? -1 : 1;
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.dim != b.dim) return a.dim < b.dim ? -1 : 1;
  if (a.index != b.index) return a.index < b.index ? -1 : 1;
  if (a.sign != b.sign) return a.sign < b.sign ? -1 : 1;
  if (a.kind == TermKind::Gen) return 0;
  if (int c = compare(a.a, b.a)) return c;
  switch (a.kind) {
    case TermKind::Comp:
    case TermKind::Bracket:
    case TermKind::BracketConn:
      return compare(a.b, b.b);
    default:
      return 0;
  }
}

std::string TermStore::print(TermId t) const {
  const TermNode& n = node(t);
  const std::string j = std::to_string(n.index);
  switch (n.kind) {
    case TermKind::Gen:
      return "gen(" + base_->label(n.dim, n.index) + ")";
    case TermKind::Comp:
      return "comp{" + std::to_string(n.dim) + "," + j + "}(" + print(n.a) + "," +
             print(n.b) + ")";
    case TermKind::Degen:
      return "deg{" + j + "}(" + print(n.a) + ")";
    case TermKind::Conn:
      return std::string(n.sign == Sign::Minus ? "connm{" : "connp{") + j + "}(" +
             print(n.a) + ")";
    case TermKind::Rev:
      return "rev{" + j + "}(" + print(n.a) + ")";
    case TermKind::Bracket:
      return "br{" + j + "}(" + print(n.a) + "," + print(n.b) + ")";
    case TermKind::BracketConn:
      return std::string(n.sign == Sign::Minus ? "brm{" : "brp{") + j + "}(" +
             print(n.a) + "," + print(n.b) + ")";
  }
  return "?";
}

namespace {

class TermParser {
 public:
  TermParser(TermStore& store, const std::string& text) : store_(store), text_(text) {}

  TermId run() {
    TermId t = term();
    skip();
    if (pos_ != text_.size()) fail("trailing input", pos_);
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    int line = 1;
    int column = 1;
    for (std::size_t k = 0; k < at && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(msg, line, column);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  int number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a number", start);
    return std::stoi(text_.substr(start, pos_ - start));
  }
  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }
  // Generator labels may contain balanced parentheses.
  std::string label() {
    skip();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++pos_;
    }
    std::string s = text_.substr(start, pos_ - start);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) fail("empty generator name", start);
    return s;
  }

  TermId wrap(std::size_t at, const std::function<TermId()>& f) {
    try {
      return f();
    } catch (const CompositionError& e) {
      fail(e.what(), at);
    }
  }

  TermId term() {
    skip();
    const std::size_t at = pos_;
    const std::string head = word();
    if (head == "gen") {
      expect('(');
      const std::string name = label();
      expect(')');
      const auto& base = store_.base();
      int found_dim = -1;
      int found = kUndefined;
      for (int d = 0; d <= base.truncation(); ++d) {
        const int c = base.find(d, name);
        if (c == kUndefined) continue;
        if (found != kUndefined) fail("generator name '" + name + "' is ambiguous", at);
        found = c;
        found_dim = d;
      }
      if (found == kUndefined) fail("unknown generator '" + name + "'", at);
      return store_.gen(found_dim, found);
    }
    if (head == "comp") {
      expect('{');
      const int n = number();
      expect(',');
      const int j = number();
      expect('}');
      expect('(');
      const TermId a = term();
      expect(',');
      const TermId b = term();
      expect(')');
      if (store_.dim(a) != n || store_.dim(b) != n) {
        fail("comp{" + std::to_string(n) + "," + std::to_string(j) +
                 "} arguments have the wrong dimension",
             at);
      }
      return wrap(at, [&] { return store_.comp(j, a, b); });
    }
    if (head == "deg" || head == "connm" || head == "connp" || head == "rev") {
      expect('{');
      const int j = number();
      expect('}');
      expect('(');
      const TermId a = term();
      expect(')');
      return wrap(at, [&] {
        if (head == "deg") return store_.degen(j, a);
        if (head == "rev") return store_.rev(j, a);
        return store_.conn(head == "connm" ? Sign::Minus : Sign::Plus, j, a);
      });
    }
    if (head == "br" || head == "brm" || head == "brp") {
      expect('{');
      const int j = number();
      expect('}');
      expect('(');
      const TermId a = term();
      expect(',');
      const TermId b = term();
      expect(')');
      return wrap(at, [&] {
        if (head == "br") return store_.bracket(j, a, b);
        return store_.bracket_conn(head == "brm" ? Sign::Minus : Sign::Plus, j, a, b);
      });
    }
    fail("unknown constructor '" + head + "'", at);
  }

  TermStore& store_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

TermId TermStore::parse(const std::string& text) { return TermParser(*this, text).run(); }

}  // namespace cubikit
