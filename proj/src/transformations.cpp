#include "cubikit/transformations.hpp"

#include <algorithm>
#include <map>

namespace cubikit {

namespace {

std::string cell_name(const StrictInstance& c, int k, int x) {
  if (x == kUndefined) return "?";
  if (k < 0 || k > c.truncation() || x < 0 || x >= c.cells.size(k)) return "#" + std::to_string(x);
  return c.cells.label(k, x);
}

std::string fname(const StrictFunctor& f) { return f.name.empty() ? "F" : f.name; }

template <class T>
int find_index(const std::vector<T>& xs, const T& x) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i] == x) return static_cast<int>(i);
  return -1;
}

int find_instance(const std::vector<InstancePtr>& xs, const InstancePtr& c) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (same_instance(xs[i], c)) return static_cast<int>(i);
  return -1;
}

// Identity 1-cell on a 0-cell of c.
int unit(const StrictInstance& c, int a) {
  if (!has_degeneracies(c.cells.variant()) || c.truncation() < 1) {
    throw CapabilityError(c.name() + " has no identity 1-cells");
  }
  return c.cells.degeneracy(0, 1, a);
}

int compose_or_throw(const StrictInstance& c, int a, int b, const std::string& what) {
  const int r = c.compose(1, 1, a, b);
  if (r == kUndefined) {
    throw OutOfUniverse(what + ": " + cell_name(c, 1, a) + " then " + cell_name(c, 1, b) +
                        " is not in " + c.name());
  }
  return r;
}

class FunctorChecker {
 public:
  explicit FunctorChecker(const StrictFunctor& f) : f_(f), s_(*f.source), t_(*f.target) {}

  Report run() {
    shape();
    if (!out_.empty()) return std::move(out_);
    faces();
    degeneracies();
    connections();
    compositions();
    reversors();
    return std::move(out_);
  }

 private:
  void add(const std::string& rule, const std::string& detail) {
    out_.push_back({rule, fname(f_) + ": " + detail});
  }
  std::string src(int k, int x) const { return cell_name(s_, k, x); }
  std::string tgt(int k, int x) const { return cell_name(t_, k, x); }
  int F(int k, int x) const { return x == kUndefined ? kUndefined : f_.maps[k][x]; }

  void expect(const std::string& rule, int k, int lhs, int rhs, const std::string& where) {
    if (lhs == rhs) return;
    add(rule, where + ": " + tgt(k, lhs) + " vs " + tgt(k, rhs));
  }

  void shape() {
    const int n = s_.truncation();
    if (t_.truncation() < n) {
      add("functor shape", "target truncation " + std::to_string(t_.truncation()) +
                               " is below the source truncation " + std::to_string(n));
      return;
    }
    if (static_cast<int>(f_.maps.size()) != n + 1) {
      add("functor shape", "expected maps for dimensions 0.." + std::to_string(n));
      return;
    }
    for (int k = 0; k <= n; ++k) {
      if (static_cast<int>(f_.maps[k].size()) != s_.cells.size(k)) {
        add("functor shape", "dimension " + std::to_string(k) + " map has the wrong length");
        continue;
      }
      for (int x = 0; x < s_.cells.size(k); ++x) {
        const int y = f_.maps[k][x];
        if (y < 0 || y >= t_.cells.size(k))
          add("functor shape", "k=" + std::to_string(k) + ", " + src(k, x) + " maps outside " +
                                   t_.name());
      }
    }
  }

  void faces() {
    for (int k = 1; k <= s_.truncation(); ++k)
      for (int j = 1; j <= k; ++j)
        for (Sign g : {Sign::Minus, Sign::Plus})
          for (int x = 0; x < s_.cells.size(k); ++x) {
            const int fx = s_.cells.face(k, j, g, x);
            if (fx == kUndefined) continue;
            const std::string sj = std::string(g == Sign::Minus ? "s" : "t") + "_" +
                                   std::to_string(j);
            expect("functor face", k - 1, F(k - 1, fx), t_.cells.face(k, j, g, F(k, x)),
                   "F(" + sj + " " + src(k, x) + ") vs " + sj + " F(" + src(k, x) + ")");
          }
  }

  void degeneracies() {
    if (!has_degeneracies(s_.cells.variant())) return;
    if (!has_degeneracies(t_.cells.variant())) {
      add("functor degeneracy", "target has no degeneracies");
      return;
    }
    for (int k = 0; k < s_.truncation(); ++k)
      for (int j = 1; j <= k + 1; ++j)
        for (int x = 0; x < s_.cells.size(k); ++x) {
          const int d = s_.cells.degeneracy(k, j, x);
          if (d == kUndefined) continue;
          expect("functor degeneracy", k + 1, F(k + 1, d), t_.cells.degeneracy(k, j, F(k, x)),
                 "F(1_" + std::to_string(j) + " " + src(k, x) + ")");
        }
  }

  void connections() {
    if (!has_connections(s_.cells.variant())) return;
    if (!has_connections(t_.cells.variant())) {
      add("functor connection", "target has no connections");
      return;
    }
    for (int k = 1; k < s_.truncation(); ++k)
      for (int j = 1; j <= k; ++j)
        for (Sign g : {Sign::Minus, Sign::Plus})
          for (int x = 0; x < s_.cells.size(k); ++x) {
            const int d = s_.cells.connection(k, g, j, x);
            if (d == kUndefined) continue;
            expect("functor connection", k + 1, F(k + 1, d),
                   t_.cells.connection(k, g, j, F(k, x)),
                   std::string("F(Γ^") + sign_char(g) + "_" + std::to_string(j) + " " +
                       src(k, x) + ")");
          }
  }

  void compositions() {
    for (int k = 1; k <= s_.truncation(); ++k)
      for (int j = 1; j <= k; ++j)
        for (const auto& [ab, c] : s_.table(k, j)) {
          const int r = t_.compose(k, j, F(k, ab.first), F(k, ab.second));
          const std::string where = "F(" + src(k, ab.first) + " ∘^" + std::to_string(k) + "_" +
                                    std::to_string(j) + " " + src(k, ab.second) + ")";
          if (r == kUndefined) {
            add("functor composition", where + ": images " + tgt(k, F(k, ab.first)) + ", " +
                                           tgt(k, F(k, ab.second)) + " do not compose");
            continue;
          }
          expect("functor composition", k, F(k, c), r, where);
        }
  }

  void reversors() {
    if (!s_.reversors || !t_.reversors) return;
    const auto& rs = *s_.reversors;
    const auto& rt = *t_.reversors;
    for (int k = 1; k <= s_.truncation(); ++k) {
      if (!rs.defined(k) || !rt.defined(k)) continue;
      for (int j = 1; j <= k; ++j)
        for (int a = 0; a < s_.cells.size(k); ++a) {
          const int fa = F(k, a);
          const int b = F(k, rs.apply(k, j, a));
          const std::string where = "k=" + std::to_string(k) + ", j=" + std::to_string(j) +
                                    ", F(R " + src(k, a) + ")";
          // Inverse-related through the target's composites when they exist,
          // otherwise compared with the target reversor directly.
          int left = kUndefined, right = kUndefined, e_s = kUndefined, e_t = kUndefined;
          if (has_degeneracies(t_.cells.variant())) {
            left = t_.compose(k, j, fa, b);
            right = t_.compose(k, j, b, fa);
            e_s = t_.cells.degeneracy(k - 1, j, t_.cells.face(k, j, Sign::Minus, fa));
            e_t = t_.cells.degeneracy(k - 1, j, t_.cells.face(k, j, Sign::Plus, fa));
          }
          if (left != kUndefined && right != kUndefined) {
            if (left != e_s || right != e_t) add("functor reversor", where + " is not inverse to F(" + src(k, a) + ")");
          } else {
            expect("functor reversor", k, b, rt.apply(k, j, fa), where);
          }
        }
    }
  }

  const StrictFunctor& f_;
  const StrictInstance& s_;
  const StrictInstance& t_;
  Report out_;
};

void require_functor_shape(const StrictFunctor& f) {
  if (!f.source || !f.target) throw InputError("functor " + fname(f) + " has no source or target");
}

std::string tname(const NatTrans& t) { return t.name.empty() ? "τ" : t.name; }

}  // namespace

bool same_instance(const InstancePtr& a, const InstancePtr& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

int StrictFunctor::apply(int k, int x) const {
  if (k < 0 || k >= static_cast<int>(maps.size()) || x < 0 ||
      x >= static_cast<int>(maps[k].size())) {
    throw InputError("functor " + fname(*this) + " is not defined on cell " + std::to_string(x) +
                     " of dimension " + std::to_string(k));
  }
  return maps[k][x];
}

bool StrictFunctor::operator==(const StrictFunctor& other) const {
  return maps == other.maps && same_instance(source, other.source) &&
         same_instance(target, other.target);
}

bool NatTrans::operator==(const NatTrans& other) const {
  return components == other.components && F == other.F && G == other.G && H == other.H &&
         K == other.K;
}

StrictFunctor identity_functor(InstancePtr c) {
  StrictFunctor f;
  f.name = "1_" + c->name();
  f.maps.resize(c->truncation() + 1);
  for (int k = 0; k <= c->truncation(); ++k) {
    f.maps[k].resize(c->cells.size(k));
    for (int x = 0; x < c->cells.size(k); ++x) f.maps[k][x] = x;
  }
  f.source = c;
  f.target = std::move(c);
  return f;
}

StrictFunctor compose(const StrictFunctor& f, const StrictFunctor& g) {
  require_functor_shape(f);
  require_functor_shape(g);
  if (!same_instance(f.target, g.source)) {
    throw CompositionError(fname(g) + "∘" + fname(f) + ": target of " + fname(f) +
                           " is not the source of " + fname(g));
  }
  StrictFunctor h;
  h.name = fname(g) + "∘" + fname(f);
  h.source = f.source;
  h.target = g.target;
  h.maps.resize(f.maps.size());
  for (std::size_t k = 0; k < f.maps.size(); ++k) {
    h.maps[k].reserve(f.maps[k].size());
    for (int x : f.maps[k]) h.maps[k].push_back(g.apply(static_cast<int>(k), x));
  }
  return h;
}

Report check_strict_functor(const StrictFunctor& f) {
  if (!f.source || !f.target) return {{"functor shape", fname(f) + ": missing source or target"}};
  return FunctorChecker(f).run();
}

Report check_naturality(const NatTrans& t) {
  Report out;
  auto shape = [&](const std::string& d) { out.push_back({"transformation shape", tname(t) + ": " + d}); };
  for (const auto* f : {&t.F, &t.G, &t.H, &t.K})
    if (!f->source || !f->target) shape("functor " + fname(*f) + " has no source or target");
  if (!out.empty()) return out;
  if (!same_instance(t.F.source, t.H.source)) shape("F and H start at different instances");
  if (!same_instance(t.F.target, t.G.source)) shape("G does not start at the target of F");
  if (!same_instance(t.H.target, t.K.source)) shape("K does not start at the target of H");
  if (!same_instance(t.G.target, t.K.target)) shape("G and K end at different instances");
  const StrictInstance& c00 = *t.F.source;
  const StrictInstance& c11 = *t.G.target;
  if (c11.truncation() < 1) shape(c11.name() + " has no 1-cells");
  if (static_cast<int>(t.components.size()) != c00.cells.size(0))
    shape("expected one component per 0-cell of " + c00.name());
  if (!out.empty()) return out;
  for (int a = 0; a < c00.cells.size(0); ++a) {
    const int x = t.components[a];
    if (x < 0 || x >= c11.cells.size(1))
      shape("component at " + cell_name(c00, 0, a) + " is not a 1-cell of " + c11.name());
  }
  if (!out.empty()) return out;

  std::vector<char> ok(c00.cells.size(0), 1);
  for (int a = 0; a < c00.cells.size(0); ++a) {
    const int x = t.components[a];
    const int gf = t.G.apply(0, t.F.apply(0, a));
    const int kh = t.K.apply(0, t.H.apply(0, a));
    const int s = c11.cells.face(1, 1, Sign::Minus, x);
    const int e = c11.cells.face(1, 1, Sign::Plus, x);
    if (s != gf || e != kh) {
      ok[a] = 0;
      out.push_back({"transformation boundary",
                     tname(t) + "(" + cell_name(c00, 0, a) + ") = " + cell_name(c11, 1, x) +
                         " runs " + cell_name(c11, 0, s) + " -> " + cell_name(c11, 0, e) +
                         ", expected " + cell_name(c11, 0, gf) + " -> " + cell_name(c11, 0, kh)});
    }
  }
  if (c00.truncation() < 1) return out;
  for (int f = 0; f < c00.cells.size(1); ++f) {
    const int a = c00.cells.face(1, 1, Sign::Minus, f);
    const int b = c00.cells.face(1, 1, Sign::Plus, f);
    if (!ok[a] || !ok[b]) continue;
    const int gf = t.G.apply(1, t.F.apply(1, f));
    const int kh = t.K.apply(1, t.H.apply(1, f));
    const std::string where = tname(t) + " at " + cell_name(c00, 1, f);
    const int lhs = compose_or_throw(c11, gf, t.components[b], where);
    const int rhs = compose_or_throw(c11, t.components[a], kh, where);
    if (lhs != rhs) {
      out.push_back({"naturality", where + ": " + cell_name(c11, 1, lhs) + " vs " +
                                       cell_name(c11, 1, rhs)});
    }
  }
  return out;
}

NatTrans vcompose(const NatTrans& rho, const NatTrans& tau) {
  if (!(rho.F == tau.K)) {
    throw CompositionError("vertical composite: top of " + tname(rho) + " is not the bottom of " +
                           tname(tau));
  }
  NatTrans r;
  r.name = tname(rho) + "∘²₁" + tname(tau);
  r.F = tau.F;
  r.H = compose(tau.H, rho.H);
  r.G = compose(tau.G, rho.G);
  r.K = rho.K;
  const StrictInstance& c = *rho.G.target;
  for (std::size_t a = 0; a < tau.components.size(); ++a) {
    const int first = rho.G.apply(1, tau.components[a]);
    const int second = rho.components.at(tau.H.apply(0, static_cast<int>(a)));
    r.components.push_back(compose_or_throw(c, first, second, r.name));
  }
  return r;
}

NatTrans hcompose(const NatTrans& rho, const NatTrans& tau) {
  if (!(rho.H == tau.G)) {
    throw CompositionError("horizontal composite: left side of " + tname(rho) +
                           " is not the right side of " + tname(tau));
  }
  NatTrans r;
  r.name = tname(rho) + "∘²₂" + tname(tau);
  r.F = compose(tau.F, rho.F);
  r.H = tau.H;
  r.G = rho.G;
  r.K = compose(tau.K, rho.K);
  const StrictInstance& c = *rho.K.target;
  for (std::size_t a = 0; a < tau.components.size(); ++a) {
    const int first = rho.components.at(tau.F.apply(0, static_cast<int>(a)));
    const int second = rho.K.apply(1, tau.components[a]);
    r.components.push_back(compose_or_throw(c, first, second, r.name));
  }
  return r;
}

Constructors transformation_constructors(const StrictFunctor& f) {
  require_functor_shape(f);
  const StrictFunctor id0 = identity_functor(f.source);
  const StrictFunctor id1 = identity_functor(f.target);
  std::vector<int> units;
  for (int a = 0; a < f.source->cells.size(0); ++a) units.push_back(unit(*f.target, f.apply(0, a)));
  auto make = [&](std::string name, const StrictFunctor& F, const StrictFunctor& G,
                  const StrictFunctor& H, const StrictFunctor& K) {
    return NatTrans{std::move(name) + "(" + fname(f) + ")", F, G, H, K, units};
  };
  return {make("1^1_{2,1}", f, id1, id0, f), make("1^1_{2,2}", id0, f, f, id1),
          make("1^{1,-}_{2,1}", f, id1, f, id1), make("1^{1,+}_{2,1}", id0, f, id0, f)};
}

TransformationFamily close_family(TransformationFamily fam, std::size_t limit) {
  auto size = [&] {
    return fam.instances.size() + fam.functors.size() + fam.transformations.size();
  };
  auto add_instance = [&](const InstancePtr& c) {
    if (find_instance(fam.instances, c) < 0) fam.instances.push_back(c);
  };
  auto add_functor = [&](StrictFunctor f) {
    if (find_index(fam.functors, f) < 0) fam.functors.push_back(std::move(f));
  };
  auto add_trans = [&](NatTrans t) {
    if (find_index(fam.transformations, t) < 0) fam.transformations.push_back(std::move(t));
  };
  for (std::size_t before = 0; before != size();) {
    before = size();
    if (before > limit) throw ResourceError("family closure exceeds " + std::to_string(limit) + " cells");
    for (std::size_t i = 0; i < fam.functors.size(); ++i) {
      add_instance(fam.functors[i].source);
      add_instance(fam.functors[i].target);
    }
    for (std::size_t i = 0; i < fam.instances.size(); ++i)
      add_functor(identity_functor(fam.instances[i]));
    const std::size_t nf = fam.functors.size();
    for (std::size_t i = 0; i < nf; ++i) {
      auto c = transformation_constructors(fam.functors[i]);
      for (auto* t : {&c.degen1, &c.degen2, &c.conn_minus, &c.conn_plus}) add_trans(*t);
      for (std::size_t j = 0; j < nf; ++j)
        if (same_instance(fam.functors[i].target, fam.functors[j].source))
          add_functor(compose(fam.functors[i], fam.functors[j]));
    }
    const std::size_t nt = fam.transformations.size();
    for (std::size_t i = 0; i < nt; ++i)
      for (std::size_t j = 0; j < nt; ++j) {
        const NatTrans& tau = fam.transformations[i];
        const NatTrans& rho = fam.transformations[j];
        if (rho.F == tau.K) add_trans(vcompose(rho, tau));
        if (rho.H == tau.G) add_trans(hcompose(rho, tau));
      }
  }
  return fam;
}

StrictInstance meta_instance(const TransformationFamily& fam) {
  std::vector<std::string> missing;
  TruncatedCubicalSet x(2, Variant::Reflexive);
  x.name = "meta";
  auto add = [&](int k, std::string label) {
    if (x.find(k, label) != kUndefined) label += "#" + std::to_string(x.size(k));
    x.add_cell(k, label);
  };
  for (const auto& c : fam.instances) add(0, c->name().empty() ? "C" : c->name());
  for (const auto& f : fam.functors) add(1, fname(f));
  for (const auto& t : fam.transformations) add(2, tname(t));

  auto instance = [&](const InstancePtr& c, const std::string& what) {
    const int i = find_instance(fam.instances, c);
    if (i < 0) missing.push_back(what);
    return i;
  };
  auto functor = [&](const StrictFunctor& f, const std::string& what) {
    const int i = find_index(fam.functors, f);
    if (i < 0) missing.push_back(what);
    return i;
  };
  auto trans = [&](const NatTrans& t, const std::string& what) {
    const int i = find_index(fam.transformations, t);
    if (i < 0) missing.push_back(what);
    return i;
  };

  for (std::size_t i = 0; i < fam.functors.size(); ++i) {
    const auto& f = fam.functors[i];
    const int n = static_cast<int>(i);
    const int s = instance(f.source, "source of " + fname(f));
    const int t = instance(f.target, "target of " + fname(f));
    if (s >= 0) x.set_face(1, 1, Sign::Minus, n, s);
    if (t >= 0) x.set_face(1, 1, Sign::Plus, n, t);
    const auto c = transformation_constructors(f);
    const std::pair<const NatTrans*, int> degens[] = {{&c.degen1, 1}, {&c.degen2, 2}};
    for (auto [d, j] : degens) {
      const int r = trans(*d, d->name);
      if (r >= 0) x.set_degeneracy(1, j, n, r);
    }
    const int cm = trans(c.conn_minus, c.conn_minus.name);
    const int cp = trans(c.conn_plus, c.conn_plus.name);
    if (cm >= 0) x.set_connection(1, Sign::Minus, 1, n, cm);
    if (cp >= 0) x.set_connection(1, Sign::Plus, 1, n, cp);
  }
  for (std::size_t i = 0; i < fam.instances.size(); ++i) {
    const int r = functor(identity_functor(fam.instances[i]), "1_" + fam.instances[i]->name());
    if (r >= 0) x.set_degeneracy(0, 1, static_cast<int>(i), r);
  }
  for (std::size_t i = 0; i < fam.transformations.size(); ++i) {
    const auto& t = fam.transformations[i];
    const int n = static_cast<int>(i);
    const std::pair<const StrictFunctor*, std::pair<int, Sign>> edges[] = {
        {&t.F, {1, Sign::Minus}}, {&t.K, {1, Sign::Plus}},
        {&t.H, {2, Sign::Minus}}, {&t.G, {2, Sign::Plus}}};
    for (auto [f, js] : edges) {
      const int r = functor(*f, fname(*f) + " (edge of " + tname(t) + ")");
      if (r >= 0) x.set_face(2, js.first, js.second, n, r);
    }
  }

  StrictInstance meta(std::move(x));
  if (!fam.functor_composites.empty()) {
    meta.comp[1][0] = fam.functor_composites;
  } else {
    for (std::size_t i = 0; i < fam.functors.size(); ++i)
      for (std::size_t j = 0; j < fam.functors.size(); ++j) {
        const auto& f = fam.functors[i];
        const auto& g = fam.functors[j];
        if (!same_instance(f.target, g.source)) continue;
        const int r = functor(compose(f, g), fname(g) + "∘" + fname(f));
        if (r >= 0) meta.set_composite(1, 1, static_cast<int>(i), static_cast<int>(j), r);
      }
  }
  const bool vertical = fam.vertical.empty();
  const bool horizontal = fam.horizontal.empty();
  if (!vertical) meta.comp[2][0] = fam.vertical;
  if (!horizontal) meta.comp[2][1] = fam.horizontal;
  for (std::size_t i = 0; i < fam.transformations.size(); ++i)
    for (std::size_t j = 0; j < fam.transformations.size(); ++j) {
      const auto& tau = fam.transformations[i];
      const auto& rho = fam.transformations[j];
      const int a = static_cast<int>(i), b = static_cast<int>(j);
      if (vertical && rho.F == tau.K) {
        const NatTrans v = vcompose(rho, tau);
        const int r = trans(v, v.name);
        if (r >= 0) meta.set_composite(2, 1, a, b, r);
      }
      if (horizontal && rho.H == tau.G) {
        const NatTrans h = hcompose(rho, tau);
        const int r = trans(h, h.name);
        if (r >= 0) meta.set_composite(2, 2, a, b, r);
      }
    }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    throw ClosureError("family is not closed: " + std::to_string(missing.size()) + " missing",
                       std::move(missing));
  }
  return meta;
}

Report check_family_members(const TransformationFamily& fam) {
  Report out;
  for (const auto& f : fam.functors)
    for (auto& v : check_strict_functor(f)) out.push_back(std::move(v));
  for (const auto& t : fam.transformations)
    for (auto& v : check_naturality(t)) out.push_back(std::move(v));
  return out;
}

Report check_cubical_2cat(const TransformationFamily& fam) {
  Report out = check_family_members(fam);

  auto declared = [&](const CompositionTable& table, const char* what, auto formula) {
    const int n = static_cast<int>(fam.transformations.size());
    for (const auto& [ab, c] : table) {
      const auto [a, b] = ab;
      if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n) {
        out.push_back({"composite formula", std::string(what) + " table entry out of range"});
        continue;
      }
      const auto& tau = fam.transformations[a];
      const auto& rho = fam.transformations[b];
      const std::string where = std::string(what) + " " + tname(tau) + ", " + tname(rho);
      try {
        if (!(formula(rho, tau) == fam.transformations[c]))
          out.push_back({"composite formula", where + ": declared " +
                                                   tname(fam.transformations[c]) +
                                                   " differs from the formula"});
      } catch (const CompositionError&) {
        out.push_back({"composite formula", where + ": not composable"});
      }
    }
  };
  declared(fam.vertical, "vertical", vcompose);
  declared(fam.horizontal, "horizontal", hcompose);
  for (const auto& [ab, c] : fam.functor_composites) {
    const int n = static_cast<int>(fam.functors.size());
    const auto [a, b] = ab;
    if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n) {
      out.push_back({"composite formula", "functor table entry out of range"});
      continue;
    }
    try {
      if (!(compose(fam.functors[a], fam.functors[b]) == fam.functors[c]))
        out.push_back({"composite formula", "functors " + fname(fam.functors[a]) + ", " +
                                                 fname(fam.functors[b]) + ": declared " +
                                                 fname(fam.functors[c]) + " differs"});
    } catch (const CompositionError&) {
      out.push_back({"composite formula", "functors " + fname(fam.functors[a]) + ", " +
                                               fname(fam.functors[b]) + ": not composable"});
    }
  }
  for (auto& v : check_strict_axioms(meta_instance(fam))) out.push_back(std::move(v));
  return out;
}

namespace fixtures {

StrictInstance terminal(int n) {
  TruncatedCubicalSet x(n, Variant::Reflexive);
  x.name = "terminal";
  for (int k = 0; k <= n; ++k) x.add_cell(k, "*");
  for (int k = 0; k <= n; ++k) {
    for (int j = 1; j <= k; ++j)
      for (Sign s : {Sign::Minus, Sign::Plus}) x.set_face(k, j, s, 0, 0);
    if (k == n) continue;
    for (int j = 1; j <= k + 1; ++j) x.set_degeneracy(k, j, 0, 0);
    for (int j = 1; j <= k && k >= 1; ++j)
      for (Sign s : {Sign::Minus, Sign::Plus}) x.set_connection(k, s, j, 0, 0);
  }
  StrictInstance c(std::move(x));
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= k; ++j) c.set_composite(k, j, 0, 0, 0);
  return c;
}

TransformationFamily identity_family(InstancePtr c) {
  TransformationFamily f;
  f.instances.push_back(std::move(c));
  return close_family(std::move(f));
}

}  // namespace fixtures

}  // namespace cubikit
