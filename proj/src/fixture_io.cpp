#include "cubikit/fixture_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace cubikit {

namespace {

using json = nlohmann::ordered_json;

std::string child(const std::string& ptr, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return ptr + "/" + escaped;
}
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json& field(const json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) throw FixtureError(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FixtureError(child(ptr, key), "missing field");
  return *it;
}

const json* optional_field(const json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

int integer(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw FixtureError(ptr, "expected an integer");
  return j.get<int>();
}

std::string string(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw FixtureError(ptr, "expected a string");
  return j.get<std::string>();
}

const json& array(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw FixtureError(ptr, "expected an array");
  return j;
}

int int_field(const json& j, const std::string& key, const std::string& ptr) {
  return integer(field(j, key, ptr), child(ptr, key));
}

void in_range(int v, int lo, int hi, const std::string& ptr) {
  if (v < lo || v > hi) {
    throw FixtureError(ptr, std::to_string(v) + " is outside " + std::to_string(lo) + ".." +
                                std::to_string(hi));
  }
}

int cell(const TruncatedCubicalSet& x, int dim, const json& j, const std::string& ptr) {
  const std::string label = string(j, ptr);
  const int c = x.find(dim, label);
  if (c == kUndefined) {
    throw FixtureError(ptr, "no cell '" + label + "' in dimension " + std::to_string(dim));
  }
  return c;
}

int cell_key(const TruncatedCubicalSet& x, int dim, const std::string& label,
             const std::string& ptr) {
  return cell(x, dim, json(label), ptr);
}

// Calls f(source cell, target cell) for every entry of a label map.
template <class F>
void each_entry(const TruncatedCubicalSet& x, int from, int to, const json& map,
                const std::string& ptr, F f) {
  if (!map.is_object()) throw FixtureError(ptr, "expected an object");
  for (auto it = map.begin(); it != map.end(); ++it) {
    const std::string p = child(ptr, it.key());
    f(cell_key(x, from, it.key(), p), cell(x, to, it.value(), p));
  }
}

Sign parse_sign(const json& j, const std::string& ptr, const char* minus, const char* plus) {
  const std::string s = string(j, ptr);
  if (s == minus) return Sign::Minus;
  if (s == plus) return Sign::Plus;
  throw FixtureError(ptr, "expected \"" + std::string(minus) + "\" or \"" + plus + "\"");
}

StrictInstance read_instance(const json& j, const std::string& ptr, bool& has_compositions) {
  if (!j.is_object()) throw FixtureError(ptr, "expected an object");
  const int n = int_field(j, "truncation", ptr);
  in_range(n, 0, 16, child(ptr, "truncation"));
  Variant v = Variant::Plain;
  if (const json* jv = optional_field(j, "variant")) {
    try {
      v = parse_variant(string(*jv, child(ptr, "variant")));
    } catch (const FixtureError&) {
      throw;
    } catch (const InputError& e) {
      throw FixtureError(child(ptr, "variant"), e.what());
    }
  }
  TruncatedCubicalSet x(n, v);
  if (const json* name = optional_field(j, "name")) x.name = string(*name, child(ptr, "name"));

  const std::string pc = child(ptr, "cells");
  const json& cells = array(field(j, "cells", ptr), pc);
  if (static_cast<int>(cells.size()) != n + 1) {
    throw FixtureError(pc, "expected " + std::to_string(n + 1) + " dimensions");
  }
  for (int k = 0; k <= n; ++k) {
    const std::string pk = child(pc, k);
    const json& row = array(cells[k], pk);
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string label = string(row[i], child(pk, i));
      if (x.find(k, label) != kUndefined) throw FixtureError(child(pk, i), "duplicate label");
      x.add_cell(k, label);
    }
  }

  if (n > 0 || optional_field(j, "faces")) {
    const std::string pf = child(ptr, "faces");
    const json& faces = array(field(j, "faces", ptr), pf);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const std::string pe = child(pf, i);
      const int k = int_field(faces[i], "dim", pe);
      in_range(k, 1, n, child(pe, "dim"));
      const int jj = int_field(faces[i], "j", pe);
      in_range(jj, 1, k, child(pe, "j"));
      const Sign s = parse_sign(field(faces[i], "kind", pe), child(pe, "kind"), "s", "t");
      each_entry(x, k, k - 1, field(faces[i], "map", pe), child(pe, "map"),
                 [&](int a, int b) { x.set_face(k, jj, s, a, b); });
    }
  }

  const json* degens = optional_field(j, "degeneracies");
  if (degens && !has_degeneracies(v)) {
    throw FixtureError(child(ptr, "degeneracies"), "a plain fixture carries no degeneracies");
  }
  if (!degens && has_degeneracies(v) && n > 0) {
    throw CapabilityError("variant " + variant_name(v) + " needs `degeneracies`");
  }
  if (degens) {
    const std::string pd = child(ptr, "degeneracies");
    array(*degens, pd);
    for (std::size_t i = 0; i < degens->size(); ++i) {
      const std::string pe = child(pd, i);
      const json& e = (*degens)[i];
      const int k = int_field(e, "dim", pe);
      in_range(k, 0, n - 1, child(pe, "dim"));
      const int jj = int_field(e, "j", pe);
      in_range(jj, 1, k + 1, child(pe, "j"));
      each_entry(x, k, k + 1, field(e, "map", pe), child(pe, "map"),
                 [&](int a, int b) { x.set_degeneracy(k, jj, a, b); });
    }
  }

  const json* conns = optional_field(j, "connections");
  if (conns && !has_connections(v)) {
    throw FixtureError(child(ptr, "connections"), "only reflexive fixtures carry connections");
  }
  if (!conns && has_connections(v) && n > 1) {
    throw CapabilityError("variant reflexive needs `connections`");
  }
  if (conns) {
    const std::string pd = child(ptr, "connections");
    array(*conns, pd);
    for (std::size_t i = 0; i < conns->size(); ++i) {
      const std::string pe = child(pd, i);
      const json& e = (*conns)[i];
      const int k = int_field(e, "dim", pe);
      in_range(k, 1, n - 1, child(pe, "dim"));
      const int jj = int_field(e, "j", pe);
      in_range(jj, 1, k, child(pe, "j"));
      const Sign g = parse_sign(field(e, "sign", pe), child(pe, "sign"), "-", "+");
      each_entry(x, k, k + 1, field(e, "map", pe), child(pe, "map"),
                 [&](int a, int b) { x.set_connection(k, g, jj, a, b); });
    }
  }

  const Report tables = check_tables(x, true);
  if (!tables.empty()) throw FixtureError(ptr, "incomplete tables: " + tables.front().detail);

  StrictInstance c(std::move(x));
  has_compositions = false;
  if (const json* comps = optional_field(j, "compositions")) {
    has_compositions = true;
    const std::string pcmp = child(ptr, "compositions");
    array(*comps, pcmp);
    for (std::size_t i = 0; i < comps->size(); ++i) {
      const std::string pe = child(pcmp, i);
      const json& e = (*comps)[i];
      const int k = int_field(e, "dim", pe);
      in_range(k, 1, n, child(pe, "dim"));
      const int jj = int_field(e, "j", pe);
      in_range(jj, 1, k, child(pe, "j"));
      const std::string pt = child(pe, "table");
      const json& table = array(field(e, "table", pe), pt);
      for (std::size_t r = 0; r < table.size(); ++r) {
        const std::string pr = child(pt, r);
        if (!table[r].is_array() || table[r].size() != 3)
          throw FixtureError(pr, "expected [a, b, a then b]");
        c.set_composite(k, jj, cell(c.cells, k, table[r][0], child(pr, 0)),
                        cell(c.cells, k, table[r][1], child(pr, 1)),
                        cell(c.cells, k, table[r][2], child(pr, 2)));
      }
    }
  }

  if (const json* rev = optional_field(j, "reversors")) {
    const std::string pr = child(ptr, "reversors");
    ReversorTable r;
    r.m = int_field(*rev, "m", pr);
    in_range(r.m, 0, n, child(pr, "m"));
    r.maps.resize(n + 1);
    for (int k = r.m + 1; k <= n; ++k)
      r.maps[k].assign(k, std::vector<int>(c.cells.size(k), kUndefined));
    const std::string pm = child(pr, "maps");
    const json& maps = array(field(*rev, "maps", pr), pm);
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const std::string pe = child(pm, i);
      const int k = int_field(maps[i], "k", pe);
      in_range(k, r.m + 1, n, child(pe, "k"));
      const int jj = int_field(maps[i], "j", pe);
      in_range(jj, 1, k, child(pe, "j"));
      each_entry(c.cells, k, k, field(maps[i], "map", pe), child(pe, "map"),
                 [&](int a, int b) { r.maps[k][jj - 1][a] = b; });
    }
    const Report rt = check_reversor_tables(c.cells, r);
    if (!rt.empty()) throw FixtureError(pr, "incomplete reversors: " + rt.front().detail);
    c.reversors = std::move(r);
  }
  return c;
}

StructureDeclaration read_structure(const json& j, const std::string& ptr) {
  StructureDeclaration d;
  try {
    d.kind = parse_structure_kind(string(field(j, "variant", ptr), child(ptr, "variant")));
  } catch (const FixtureError&) {
    throw;
  } catch (const InputError& e) {
    throw FixtureError(child(ptr, "variant"), e.what());
  }
  if (const json* m = optional_field(j, "m")) d.m = integer(*m, child(ptr, "m"));
  if (const json* chains = optional_field(j, "chains")) {
    const std::string pc = child(ptr, "chains");
    array(*chains, pc);
    for (std::size_t i = 0; i < chains->size(); ++i) {
      const std::string pe = child(pc, i);
      ReversorChain ch;
      ch.k = int_field((*chains)[i], "k", pe);
      ch.p = int_field((*chains)[i], "p", pe);
      const std::string pi = child(pe, "indices");
      const json& idx = array(field((*chains)[i], "indices", pe), pi);
      for (std::size_t t = 0; t < idx.size(); ++t) ch.indices.push_back(integer(idx[t], child(pi, t)));
      d.chains.push_back(std::move(ch));
    }
  }
  return d;
}

int line_of(const std::string& text, std::size_t byte, int& column) {
  int line = 1;
  column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return line;
}

json label_map(const std::vector<int>& row, const TruncatedCubicalSet& x, int from, int to) {
  json m = json::object();
  for (std::size_t a = 0; a < row.size(); ++a)
    if (row[a] != kUndefined) m[x.label(from, static_cast<int>(a))] = x.label(to, row[a]);
  return m;
}

json instance_json(const StrictInstance& c, bool compositions) {
  const auto& x = c.cells;
  const int n = x.truncation();
  json j;
  j["name"] = x.name;
  j["truncation"] = n;
  j["variant"] = variant_name(x.variant());
  json cells = json::array();
  for (int k = 0; k <= n; ++k) cells.push_back(x.labels(k));
  j["cells"] = cells;
  json faces = json::array();
  for (int k = 1; k <= n; ++k)
    for (int jj = 1; jj <= k; ++jj)
      for (Sign s : {Sign::Minus, Sign::Plus})
        faces.push_back({{"dim", k},
                         {"j", jj},
                         {"kind", s == Sign::Minus ? "s" : "t"},
                         {"map", label_map(x.face_row(k, jj, s), x, k, k - 1)}});
  j["faces"] = faces;
  if (has_degeneracies(x.variant())) {
    json d = json::array();
    for (int k = 0; k < n; ++k)
      for (int jj = 1; jj <= k + 1; ++jj)
        d.push_back({{"dim", k}, {"j", jj}, {"map", label_map(x.degeneracy_row(k, jj), x, k, k + 1)}});
    j["degeneracies"] = d;
  }
  if (has_connections(x.variant())) {
    json d = json::array();
    for (int k = 1; k < n; ++k)
      for (int jj = 1; jj <= k; ++jj)
        for (Sign g : {Sign::Minus, Sign::Plus})
          d.push_back({{"dim", k},
                       {"j", jj},
                       {"sign", std::string(1, sign_char(g))},
                       {"map", label_map(x.connection_row(k, g, jj), x, k, k + 1)}});
    j["connections"] = d;
  }
  if (compositions) {
    json d = json::array();
    for (int k = 1; k <= n; ++k)
      for (int jj = 1; jj <= k; ++jj) {
        json table = json::array();
        for (const auto& [ab, r] : c.table(k, jj))
          table.push_back({x.label(k, ab.first), x.label(k, ab.second), x.label(k, r)});
        d.push_back({{"dim", k}, {"j", jj}, {"table", table}});
      }
    j["compositions"] = d;
  }
  if (c.reversors) {
    json maps = json::array();
    for (int k = c.reversors->m + 1; k <= n; ++k) {
      if (!c.reversors->defined(k)) continue;
      for (int jj = 1; jj <= k; ++jj)
        maps.push_back({{"k", k}, {"j", jj}, {"map", label_map(c.reversors->maps[k][jj - 1], x, k, k)}});
    }
    j["reversors"] = {{"m", c.reversors->m}, {"maps", maps}};
  }
  return j;
}

bool any_composites(const StrictInstance& c) {
  for (const auto& row : c.comp)
    for (const auto& t : row)
      if (!t.empty()) return true;
  return false;
}

}  // namespace

Fixture parse_fixture(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    int column = 1;
    const int line = line_of(text, e.byte, column);
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg, line, column);
  }
  Fixture f;
  try {
    f.instance = read_instance(j, "", f.has_compositions);
    if (const json* s = optional_field(j, "structure")) f.structure = read_structure(*s, "/structure");

    const json* functors = optional_field(j, "functors");
    const json* trans = optional_field(j, "transformations");
    if (trans && !functors) throw FixtureError("/transformations", "needs `functors`");
    if (!functors) return f;

    std::map<std::string, InstancePtr> instances;
    auto main = std::make_shared<const StrictInstance>(f.instance);
    f.family.instances.push_back(main);
    instances[main->name()] = main;
    if (const json* more = optional_field(j, "instances")) {
      array(*more, "/instances");
      for (std::size_t i = 0; i < more->size(); ++i) {
        bool comps = false;
        auto c = std::make_shared<const StrictInstance>(
            read_instance((*more)[i], child("/instances", i), comps));
        if (!instances.emplace(c->name(), c).second)
          throw FixtureError(child(child("/instances", i), "name"), "duplicate instance name");
        f.family.instances.push_back(c);
      }
    }
    auto instance = [&](const json& e, const std::string& key, const std::string& ptr) {
      const std::string p = child(ptr, key);
      const std::string name = string(field(e, key, ptr), p);
      auto it = instances.find(name);
      if (it == instances.end()) throw FixtureError(p, "no instance '" + name + "'");
      return it->second;
    };

    std::map<std::string, int> functor_index;
    array(*functors, "/functors");
    for (std::size_t i = 0; i < functors->size(); ++i) {
      const std::string pe = child("/functors", i);
      const json& e = (*functors)[i];
      StrictFunctor F;
      F.name = string(field(e, "name", pe), child(pe, "name"));
      F.source = instance(e, "source", pe);
      F.target = instance(e, "target", pe);
      const int n = F.source->truncation();
      F.maps.assign(n + 1, {});
      for (int k = 0; k <= n; ++k) F.maps[k].assign(F.source->cells.size(k), kUndefined);
      const std::string pm = child(pe, "maps");
      const json& maps = array(field(e, "maps", pe), pm);
      for (std::size_t t = 0; t < maps.size(); ++t) {
        const std::string pd = child(pm, t);
        const int k = int_field(maps[t], "dim", pd);
        in_range(k, 0, std::min(n, F.target->truncation()), child(pd, "dim"));
        const std::string pmap = child(pd, "map");
        const json& m = field(maps[t], "map", pd);
        if (!m.is_object()) throw FixtureError(pmap, "expected an object");
        for (auto it = m.begin(); it != m.end(); ++it) {
          const std::string p = child(pmap, it.key());
          F.maps[k][cell_key(F.source->cells, k, it.key(), p)] =
              cell(F.target->cells, k, it.value(), p);
        }
      }
      for (int k = 0; k <= n; ++k)
        for (int x = 0; x < F.source->cells.size(k); ++x)
          if (F.maps[k][x] == kUndefined)
            throw FixtureError(pm, "no image for " + F.source->cells.label(k, x));
      if (!functor_index.emplace(F.name, static_cast<int>(i)).second)
        throw FixtureError(child(pe, "name"), "duplicate functor name");
      f.family.functors.push_back(std::move(F));
    }

    if (trans) {
      array(*trans, "/transformations");
      for (std::size_t i = 0; i < trans->size(); ++i) {
        const std::string pe = child("/transformations", i);
        const json& e = (*trans)[i];
        NatTrans t;
        t.name = string(field(e, "name", pe), child(pe, "name"));
        for (auto [key, slot] : {std::pair{"F", &t.F}, {"G", &t.G}, {"H", &t.H}, {"K", &t.K}}) {
          const std::string p = child(pe, key);
          const std::string name = string(field(e, key, pe), p);
          auto it = functor_index.find(name);
          if (it == functor_index.end()) throw FixtureError(p, "no functor '" + name + "'");
          *slot = f.family.functors[it->second];
        }
        const auto& c00 = *t.F.source;
        const auto& c11 = *t.G.target;
        if (c11.truncation() < 1) throw FixtureError(child(pe, "G"), "target has no 1-cells");
        t.components.assign(c00.cells.size(0), kUndefined);
        const std::string pc = child(pe, "components");
        const json& m = field(e, "components", pe);
        if (!m.is_object()) throw FixtureError(pc, "expected an object");
        for (auto it = m.begin(); it != m.end(); ++it) {
          const std::string p = child(pc, it.key());
          t.components[cell_key(c00.cells, 0, it.key(), p)] = cell(c11.cells, 1, it.value(), p);
        }
        for (int a = 0; a < c00.cells.size(0); ++a)
          if (t.components[a] == kUndefined)
            throw FixtureError(pc, "no component at " + c00.cells.label(0, a));
        f.family.transformations.push_back(std::move(t));
      }
    }
  } catch (const json::exception& e) {
    throw FixtureError("", e.what());
  }
  return f;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return parse_fixture(s.str());
}

std::string emit_fixture(const Fixture& f) {
  json j = instance_json(f.instance, f.has_compositions);
  if (f.structure) {
    json chains = json::array();
    for (const auto& c : f.structure->chains)
      chains.push_back({{"k", c.k}, {"p", c.p}, {"indices", c.indices}});
    j["structure"] = {{"variant", structure_kind_name(f.structure->kind)},
                      {"m", f.structure->m},
                      {"chains", chains}};
  }
  if (!f.family.functors.empty()) {
    json more = json::array();
    for (std::size_t i = 1; i < f.family.instances.size(); ++i)
      more.push_back(instance_json(*f.family.instances[i], any_composites(*f.family.instances[i])));
    if (!more.empty()) j["instances"] = more;
    json functors = json::array();
    for (const auto& F : f.family.functors) {
      json maps = json::array();
      for (std::size_t k = 0; k < F.maps.size(); ++k) {
        json m = json::object();
        for (std::size_t x = 0; x < F.maps[k].size(); ++x)
          m[F.source->cells.label(static_cast<int>(k), static_cast<int>(x))] =
              F.target->cells.label(static_cast<int>(k), F.maps[k][x]);
        maps.push_back({{"dim", k}, {"map", m}});
      }
      functors.push_back({{"name", F.name},
                          {"source", F.source->name()},
                          {"target", F.target->name()},
                          {"maps", maps}});
    }
    j["functors"] = functors;
    json trans = json::array();
    for (const auto& t : f.family.transformations) {
      json comps = json::object();
      for (std::size_t a = 0; a < t.components.size(); ++a)
        comps[t.F.source->cells.label(0, static_cast<int>(a))] =
            t.G.target->cells.label(1, t.components[a]);
      trans.push_back({{"name", t.name},
                       {"F", t.F.name},
                       {"G", t.G.name},
                       {"H", t.H.name},
                       {"K", t.K.name},
                       {"components", comps}});
    }
    j["transformations"] = trans;
  }
  return j.dump(2) + "\n";
}

std::string emit_fixture(const StrictInstance& c) {
  Fixture f;
  f.instance = c;
  f.has_compositions = any_composites(c);
  return emit_fixture(f);
}

}  // namespace cubikit
