#include "cubikit/free_strict.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace cubikit {

std::pair<int, int> QuotientStructure::class_of(TermId t) const {
  auto it = cls_.find(t);
  if (it == cls_.end()) {
    throw OutOfUniverse("term " + store->print(t) + " is outside the universe (dim <= " +
                        std::to_string(options.max_dim) +
                        ", depth <= " + std::to_string(options.depth) + ")");
  }
  return it->second;
}

TermId QuotientStructure::representative(TermId t) const {
  auto [d, c] = class_of(t);
  return reps[d][c];
}

bool QuotientStructure::decide_equal(TermId a, TermId b) const {
  std::vector<std::string> missing;
  if (!contains(a)) missing.push_back(store->print(a));
  if (!contains(b)) missing.push_back(store->print(b));
  if (!missing.empty()) {
    std::string msg = "outside the universe:";
    for (const auto& m : missing) msg += " " + m;
    throw OutOfUniverse(msg);
  }
  return class_of(a) == class_of(b);
}

std::size_t QuotientStructure::class_count() const {
  std::size_t n = 0;
  for (const auto& r : reps) n += r.size();
  return n;
}

std::size_t QuotientStructure::class_count(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(reps.size())) return 0;
  return reps[dim].size();
}

std::vector<TermId> QuotientStructure::members(int dim, int cls) const {
  std::vector<TermId> out;
  for (TermId t : universe) {
    if (cls_.at(t) == std::make_pair(dim, cls)) out.push_back(t);
  }
  return out;
}

std::vector<TermId> term_universe(TermStore& store, const FreeStrictOptions& opt) {
  const auto& base = store.base();
  const int top = opt.max_dim;
  std::vector<TermId> out;
  std::vector<std::vector<TermId>> all(top + 1);
  std::vector<TermId> layer;
  auto budget = [&]() {
    if (out.size() + layer.size() > opt.max_terms) {
      throw ResourceError("universe exceeds " + std::to_string(opt.max_terms) +
                          " terms at depth " + std::to_string(store.depth(layer.back())) +
                          " (" + std::to_string(out.size() + layer.size()) + " generated)");
    }
  };
  for (int d = 0; d <= std::min(top, base.truncation()); ++d) {
    for (int c = 0; c < base.size(d); ++c) layer.push_back(store.gen(d, c));
  }
  // sources[n][j-1]: s_j face -> terms of dim n with that face
  using Index = std::unordered_map<TermId, std::vector<TermId>>;
  std::vector<std::vector<Index>> src_all(top + 1), src_new(top + 1);
  for (int n = 1; n <= top; ++n) {
    src_all[n].resize(n);
    src_new[n].resize(n);
  }
  for (int depth = 1;; ++depth) {
    // Register the finished layer.
    for (int n = 1; n <= top; ++n)
      for (auto& idx : src_new[n]) idx.clear();
    for (TermId t : layer) {
      const int n = store.dim(t);
      all[n].push_back(t);
      out.push_back(t);
      for (int j = 1; j <= n; ++j) {
        const TermId f = store.face(t, Sign::Minus, j);
        src_all[n][j - 1][f].push_back(t);
        src_new[n][j - 1][f].push_back(t);
      }
    }
    if (depth >= opt.depth) break;
    std::vector<TermId> fresh_layer;
    std::swap(layer, fresh_layer);
    for (TermId t : fresh_layer) {
      const int n = store.dim(t);
      if (n + 1 <= top) {
        for (int j = 1; j <= n + 1; ++j) layer.push_back(store.degen(j, t));
        for (int j = 1; j <= n; ++j) {
          layer.push_back(store.conn(Sign::Minus, j, t));
          layer.push_back(store.conn(Sign::Plus, j, t));
        }
      }
      if (opt.reversors && n >= 1) {
        for (int j = 1; j <= n; ++j) layer.push_back(store.rev(j, t));
      }
    }
    budget();
    for (int n = 1; n <= top; ++n) {
      for (int j = 1; j <= n; ++j) {
        for (TermId a : all[n]) {
          const bool a_new = store.depth(a) == depth;
          const Index& idx = a_new ? src_all[n][j - 1] : src_new[n][j - 1];
          auto it = idx.find(store.face(a, Sign::Plus, j));
          if (it == idx.end()) continue;
          for (TermId b : it->second) layer.push_back(store.comp(j, a, b));
        }
        if (!layer.empty()) budget();
      }
    }
    if (layer.empty()) break;
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

std::uint64_t pack(int tag, int sign, int j, int a, int b) {
  return (static_cast<std::uint64_t>(tag) << 60) | (static_cast<std::uint64_t>(sign) << 59) |
         (static_cast<std::uint64_t>(j) << 54) | (static_cast<std::uint64_t>(a) << 27) |
         static_cast<std::uint64_t>(b);
}

class Saturation {
 public:
  Saturation(TermStore& store, const std::vector<TermId>& universe)
      : store_(store), n_(universe.size()), uf_(universe.size()) {
    if (n_ >= (1u << 27)) throw ResourceError("universe too large for class keys");
    dense_.assign(store.size(), -1);
    for (std::size_t u = 0; u < n_; ++u) dense_[universe[u]] = static_cast<int>(u);
    nodes_.reserve(n_);
    face_offset_.reserve(n_ + 1);
    for (std::size_t u = 0; u < n_; ++u) {
      const TermNode& t = store.node(universe[u]);
      Node nd{t.kind, sign_index(t.sign), t.index, t.dim, -1, -1};
      if (t.kind != TermKind::Gen) nd.a = dense(t.a);
      if (t.kind == TermKind::Comp) nd.b = dense(t.b);
      nodes_.push_back(nd);
      face_offset_.push_back(static_cast<int>(faces_.size()));
      for (int i = 1; i <= t.dim; ++i) {
        for (Sign s : {Sign::Minus, Sign::Plus}) {
          faces_.push_back(dense(store.face(universe[u], s, i)));
        }
      }
      if (t.kind == TermKind::Gen) gen_index_[{t.dim, t.index}] = static_cast<int>(u);
    }
    face_offset_.push_back(static_cast<int>(faces_.size()));
  }

  void run(std::map<std::string, std::size_t>& tally) {
    for (;;) {
      congruence();
      build_classes();
      tally.clear();
      tally_ = &tally;
      pending_.clear();
      apply_rules();
      bool merged = false;
      for (auto [a, b] : pending_) merged |= uf_.unite(a, b);
      if (!merged) break;
    }
    for (auto it = tally.begin(); it != tally.end();) {
      it = it->second == 0 ? tally.erase(it) : std::next(it);
    }
  }

  int find(int u) { return uf_.find(u); }

 private:
  struct Node {
    TermKind kind;
    int sign;
    int j;  // index, or cell for Gen
    int dim;
    int a;
    int b;
  };

  int dense(TermId t) const {
    if (t >= dense_.size() || dense_[t] < 0) {
      throw Error("term universe is not closed under faces and subterms: " + store_.print(t));
    }
    return dense_[t];
  }
  int face(int u, Sign s, int i) const {
    return faces_[face_offset_[u] + (i - 1) * 2 + sign_index(s)];
  }

  void congruence() {
    for (;;) {
      std::unordered_map<std::uint64_t, int> seen;
      std::unordered_map<std::uint64_t, int> seen_gen;
      seen.reserve(n_ * 2);
      bool changed = false;
      for (std::size_t u = 0; u < n_; ++u) {
        const Node& nd = nodes_[u];
        if (nd.kind == TermKind::Gen) continue;
        const int a = uf_.find(nd.a);
        const int b = nd.b < 0 ? 0 : uf_.find(nd.b);
        const std::uint64_t key = pack(static_cast<int>(nd.kind), nd.sign, nd.j, a, b);
        auto [it, fresh] = seen.emplace(key, static_cast<int>(u));
        if (!fresh) changed |= uf_.unite(it->second, static_cast<int>(u));
      }
      if (!changed) break;
    }
  }

  // Distinct decompositions of each class, children as class roots.
  struct Op {
    TermKind kind;
    int sign;
    int j;  // index, or cell for Gen
    int dim;
    int a;
    int b;
  };

  void build_classes() {
    op_.clear();
    decomp_.assign(n_, {});
    rep_.assign(n_, -1);
    for (std::size_t u = 0; u < n_; ++u) {
      const int r = uf_.find(static_cast<int>(u));
      if (rep_[r] < 0) rep_[r] = static_cast<int>(u);
      const Node& nd = nodes_[u];
      if (nd.kind == TermKind::Gen) {
        decomp_[r].push_back({nd.kind, 0, nd.j, nd.dim, -1, -1});
        continue;
      }
      const int a = uf_.find(nd.a);
      const int b = nd.b < 0 ? 0 : uf_.find(nd.b);
      if (op_.emplace(pack(static_cast<int>(nd.kind), nd.sign, nd.j, a, b), r).second) {
        decomp_[r].push_back({nd.kind, nd.sign, nd.j, nd.dim, a, nd.b < 0 ? -1 : b});
      }
    }
  }

  template <typename F>
  void for_decomp(int root, F&& f) {
    for (const Op& op : decomp_[root]) f(op);
  }

  int lookup(TermKind k, int sign, int j, int a, int b = 0) const {
    if (a < 0 || b < 0) return -1;
    auto it = op_.find(pack(static_cast<int>(k), sign, j, a, b));
    return it == op_.end() ? -1 : it->second;
  }
  int comp(int j, int a, int b) const { return lookup(TermKind::Comp, 0, j, a, b); }
  int degen(int j, int a) const { return lookup(TermKind::Degen, 0, j, a); }
  int conn(int g, int j, int a) const { return lookup(TermKind::Conn, g, j, a); }

  void equate(const char* rule, int x, int y) {
    auto& count = (*tally_)[rule];
    if (y < 0 || x < 0) {
      ++count;
      return;
    }
    if (uf_.find(x) != uf_.find(y)) pending_.push_back({x, y});
  }

  void apply_rules() {
    const auto& base = store_.base();
    for (std::size_t u = 0; u < n_; ++u) {
      const int r = uf_.find(static_cast<int>(u));
      const int first = rep_[r];
      if (first == static_cast<int>(u)) continue;
      for (int i = 1; i <= nodes_[u].dim; ++i)
        for (Sign s : {Sign::Minus, Sign::Plus})
          equate("face congruence", face(static_cast<int>(u), s, i), face(first, s, i));
    }
    for (std::size_t r = 0; r < n_; ++r) {
      for (const Op& op : decomp_[r]) {
        switch (op.kind) {
          case TermKind::Comp:
            comp_rules(op, static_cast<int>(r));
            break;
          case TermKind::Degen:
            degen_rules(op, static_cast<int>(r), base);
            break;
          case TermKind::Conn:
            conn_rules(op, static_cast<int>(r), base);
            break;
          default:
            break;
        }
      }
    }
  }

  void comp_rules(const Op& nd, int r) {
    const int j = nd.j;
    const int P = nd.a;
    const int Q = nd.b;
    const int src_q = uf_.find(face(rep_[Q], Sign::Minus, j));
    const int tgt_p = uf_.find(face(rep_[P], Sign::Plus, j));
    for_decomp(P, [&](const Op& x) {
      if (x.kind == TermKind::Comp && x.j == j) {
        const int yq = comp(j, x.b, Q);
        equate("associativity", r, yq < 0 ? -1 : comp(j, x.a, yq));
      }
      if (x.kind == TermKind::Degen && x.j == j && x.a == src_q) {
        equate("unit", r, Q);
      }
      if (x.kind == TermKind::Comp && x.j != j) {
        const int i = x.j;
        for_decomp(Q, [&](const Op& y) {
          if (y.kind != TermKind::Comp || y.j != i) return;
          const int ac = comp(j, x.a, y.a);
          const int bd = comp(j, x.b, y.b);
          equate("interchange", r, ac < 0 || bd < 0 ? -1 : comp(i, ac, bd));
        });
      }
      if (x.kind == TermKind::Conn && x.sign == 1 && (x.j == j || x.j + 1 == j)) {
        const int i = x.j;
        for_decomp(Q, [&](const Op& y) {
          if (y.kind != TermKind::Conn || y.sign != 0 || y.j != i || y.a != x.a) return;
          equate("connection composition", r, degen(j == i ? i + 1 : i, x.a));
        });
      }
      if (x.kind == TermKind::Rev && x.j == j && x.a == Q) {
        equate("inverse", r, degen(j, uf_.find(face(rep_[Q], Sign::Plus, j))));
      }
    });
    for_decomp(Q, [&](const Op& y) {
      if (y.kind == TermKind::Degen && y.j == j && y.a == tgt_p) {
        equate("unit", r, P);
      }
      if (y.kind == TermKind::Rev && y.j == j && y.a == P) {
        equate("inverse", r, degen(j, uf_.find(face(rep_[P], Sign::Minus, j))));
      }
    });
  }

  void degen_rules(const Op& nd, int r, const TruncatedCubicalSet& base) {
    const int i = nd.j;
    for_decomp(nd.a, [&](const Op& x) {
      if (x.kind == TermKind::Comp) {
        const int j = x.j;
        const int jj = i <= j ? j + 1 : j;
        const int da = degen(i, x.a);
        const int db = degen(i, x.b);
        equate("degeneracy distribution", r, da < 0 || db < 0 ? -1 : comp(jj, da, db));
      } else if (x.kind == TermKind::Degen && i <= x.j) {
        const int inner = degen(i, x.a);
        equate("degeneracies (i)", r, inner < 0 ? -1 : degen(x.j + 1, inner));
      } else if (x.kind == TermKind::Gen) {
        if (x.dim < base.truncation() && has_degeneracies(base.variant())) {
          const int y = base.degeneracy(x.dim, i, x.j);
          if (y != kUndefined) equate("generator structure", r, gen(x.dim + 1, y));
        }
      }
    });
  }

  void conn_rules(const Op& nd, int r, const TruncatedCubicalSet& base) {
    const int i = nd.j;
    const int g = nd.sign;
    for_decomp(nd.a, [&](const Op& x) {
      if (x.kind == TermKind::Comp && x.j != i) {
        const int j = x.j;
        const int jj = i < j ? j + 1 : j;
        const int ca = conn(g, i, x.a);
        const int cb = conn(g, i, x.b);
        equate("connection distribution", r, ca < 0 || cb < 0 ? -1 : comp(jj, ca, cb));
      } else if (x.kind == TermKind::Comp) {
        const int a = x.a;
        const int b = x.b;
        int A, B, C, D;
        if (g == 1) {
          A = conn(g, i, a);
          B = degen(i, a);
          C = degen(i + 1, a);
          D = conn(g, i, b);
        } else {
          A = conn(g, i, a);
          B = degen(i + 1, b);
          C = degen(i, b);
          D = conn(g, i, b);
        }
        const int top = A < 0 || B < 0 ? -1 : comp(i, A, B);
        const int bottom = C < 0 || D < 0 ? -1 : comp(i, C, D);
        equate(g == 1 ? "transport (iv)" : "transport (v)", r,
               top < 0 || bottom < 0 ? -1 : comp(i + 1, top, bottom));
      } else if (x.kind == TermKind::Conn && x.sign == g && i <= x.j) {
        const int inner = conn(g, i, x.a);
        equate(i < x.j ? "connections (i)" : "connections (ii)", r,
               inner < 0 ? -1 : conn(g, x.j + 1, inner));
      } else if (x.kind == TermKind::Degen) {
        const int j = x.j;
        const int X = x.a;
        int target;
        if (i < j) {
          const int inner = conn(g, i, X);
          target = inner < 0 ? -1 : degen(j + 1, inner);
        } else if (j < i) {
          const int inner = conn(g, i - 1, X);
          target = inner < 0 ? -1 : degen(j, inner);
        } else {
          const int inner = degen(j, X);
          target = inner < 0 ? -1 : degen(j, inner);
        }
        equate(i == j ? "connections (iv)" : "connections (iii)", r, target);
      } else if (x.kind == TermKind::Gen) {
        if (x.dim >= 1 && x.dim < base.truncation() && has_connections(base.variant())) {
          const int y = base.connection(x.dim, g == 1 ? Sign::Plus : Sign::Minus, i, x.j);
          if (y != kUndefined) equate("generator structure", r, gen(x.dim + 1, y));
        }
      }
    });
  }

  int gen(int dim, int cell) const {
    auto it = gen_index_.find({dim, cell});
    return it == gen_index_.end() ? -1 : it->second;
  }

  TermStore& store_;
  std::size_t n_;
  UnionFind uf_;
  std::vector<int> dense_;
  std::vector<Node> nodes_;
  std::vector<int> faces_;
  std::vector<int> face_offset_;
  std::map<std::pair<int, int>, int> gen_index_;
  std::unordered_map<std::uint64_t, int> op_;
  std::vector<std::vector<Op>> decomp_;
  std::vector<int> rep_;
  std::vector<std::pair<int, int>> pending_;
  std::map<std::string, std::size_t>* tally_ = nullptr;
};

}  // namespace

QuotientStructure free_strict(std::shared_ptr<TermStore> store, const FreeStrictOptions& opt) {
  if (opt.max_dim < 0 || opt.depth < 1) {
    throw InputError("free_strict needs max_dim >= 0 and depth >= 1");
  }
  QuotientStructure q;
  q.store = store;
  q.options = opt;
  std::vector<TermId> universe = term_universe(*store, opt);
  Saturation sat(*store, universe);
  sat.run(q.boundary_tally);

  std::vector<int> order(universe.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return store->compare(universe[x], universe[y]) < 0;
  });
  TruncatedCubicalSet cells(opt.max_dim, Variant::Reflexive);
  cells.name = "free strict on " + store->base().name;
  q.reps.assign(opt.max_dim + 1, {});
  std::unordered_map<int, std::pair<int, int>> root_class;
  for (int u : order) {
    const TermId t = universe[u];
    const int root = sat.find(u);
    auto it = root_class.find(root);
    if (it == root_class.end()) {
      const int d = store->dim(t);
      const int idx = cells.add_cell(d, store->print(t));
      q.reps[d].push_back(t);
      it = root_class.emplace(root, std::make_pair(d, idx)).first;
    }
    q.cls_.emplace(t, it->second);
    q.universe.push_back(t);
  }
  for (int d = 1; d <= opt.max_dim; ++d) {
    for (int c = 0; c < static_cast<int>(q.reps[d].size()); ++c) {
      for (int i = 1; i <= d; ++i)
        for (Sign s : {Sign::Minus, Sign::Plus})
          cells.set_face(d, i, s, c, q.cls_.at(store->face(q.reps[d][c], s, i)).second);
    }
  }
  StrictInstance tables(std::move(cells));
  if (opt.reversors) {
    ReversorTable rt;
    rt.m = 0;
    rt.maps.resize(opt.max_dim + 1);
    for (int k = 1; k <= opt.max_dim; ++k) {
      rt.maps[k].assign(k, std::vector<int>(q.reps[k].size(), kUndefined));
    }
    tables.reversors = std::move(rt);
  }
  for (TermId t : q.universe) {
    const TermNode& n = store->node(t);
    const int c = q.cls_.at(t).second;
    switch (n.kind) {
      case TermKind::Comp:
        tables.set_composite(n.dim, n.index, q.cls_.at(n.a).second, q.cls_.at(n.b).second, c);
        break;
      case TermKind::Degen:
        tables.cells.set_degeneracy(n.dim - 1, n.index, q.cls_.at(n.a).second, c);
        break;
      case TermKind::Conn:
        tables.cells.set_connection(n.dim - 1, n.sign, n.index, q.cls_.at(n.a).second, c);
        break;
      case TermKind::Rev:
        tables.reversors->maps[n.dim][n.index - 1][q.cls_.at(n.a).second] = c;
        break;
      default:
        break;
    }
  }
  q.tables = std::move(tables);
  return q;
}

QuotientStructure free_strict(std::shared_ptr<const TruncatedCubicalSet> x,
                              const FreeStrictOptions& opt) {
  return free_strict(std::make_shared<TermStore>(std::move(x)), opt);
}

}  // namespace cubikit
