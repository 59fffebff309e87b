// Command-line front end. Exit codes: 0 clean, 1 violations, 2 input errors.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "cubikit/fixture_io.hpp"
#include "cubikit/fixtures.hpp"
#include "cubikit/weak.hpp"

using namespace cubikit;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "text";
  std::string variant;
  int max_dim = -1;
  int depth = -1;
  int max_len = -1;
  std::string fixture;
  std::string word;
  int m = 0;
  int n = 0;
  std::string name;
  bool opposite = false;
  bool reversors = false;
  bool no_connection_brackets = false;
};

bool as_json(const Options& o) { return o.format == "json"; }

Variant variant_or(const Options& o, Variant fallback) {
  return o.variant.empty() ? fallback : parse_variant(o.variant);
}

json report_json(const Report& r) {
  json a = json::array();
  for (const auto& v : r) a.push_back({{"rule", v.rule}, {"detail", v.detail}});
  return a;
}

// Prints the report and returns the exit code.
int finish(const Options& o, const Report& r, json extra = json::object(),
           const std::string& text = "") {
  if (as_json(o)) {
    extra["ok"] = r.empty();
    extra["violations"] = report_json(r);
    std::cout << extra.dump(2) << "\n";
  } else {
    std::cout << text;
    for (const auto& v : r) std::cout << v.rule << ": " << v.detail << "\n";
    if (r.empty()) std::cout << "ok\n";
    else std::cout << r.size() << (r.size() == 1 ? " violation\n" : " violations\n");
  }
  return r.empty() ? 0 : 1;
}

Fixture load(const Options& o) { return load_fixture(o.fixture); }

TruncatedCubicalSet cells_for(const Options& o, const Fixture& f) {
  TruncatedCubicalSet x = f.instance.cells;
  if (o.variant.empty()) return x;
  const Variant want = parse_variant(o.variant);
  if (static_cast<int>(want) > static_cast<int>(x.variant())) {
    throw CapabilityError("fixture '" + x.name + "' has no tables for variant " + variant_name(want));
  }
  x.set_variant(want);
  return x;
}

int cmd_normalize(const Options& o) {
  const Variant v = variant_or(o, Variant::Reflexive);
  const Word w = parse_word(o.word);
  check_variant(w, v);
  const Word nf = normalize(w, v);
  if (as_json(o)) {
    std::cout << json{{"word", to_string(w)}, {"variant", variant_name(v)}, {"normal_form", to_string(nf)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << to_string(nf) << "\n";
  }
  return 0;
}

int cmd_hom(const Options& o) {
  const Variant v = variant_or(o, Variant::Reflexive);
  const int len = o.max_len < 0 ? 4 : o.max_len;
  const HomSet h = enumerate_hom(o.m, o.n, v, len);
  if (as_json(o)) {
    json cls = json::array();
    for (const auto& w : h.classes) cls.push_back(to_string(w));
    std::cout << json{{"from", o.m},
                      {"to", o.n},
                      {"variant", variant_name(v)},
                      {"max_len", len},
                      {"classes", cls},
                      {"stabilized", h.stabilized}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& w : h.classes) std::cout << to_string(w) << "\n";
    std::cout << h.classes.size() << " classes from " << o.m << " to " << o.n << " (max length "
              << len << (h.stabilized ? ", stabilized" : ", not stabilized") << ")\n";
  }
  return 0;
}

int cmd_confluence(const Options& o) {
  const Variant v = variant_or(o, Variant::Reflexive);
  const int level = o.max_dim < 0 ? 4 : o.max_dim;
  const int len = o.max_len < 0 ? 3 : o.max_len;
  const ConfluenceReport c = check_local_confluence(level, len, v);
  Report r;
  for (const auto& p : c.unjoinable)
    r.push_back({"critical pair", to_string(p.overlap) + " -> " + to_string(p.left) + " | " +
                                      to_string(p.right)});
  std::ostringstream text;
  text << "examined " << c.examined << " critical pairs up to level " << level << "\n";
  return finish(o, r, {{"variant", variant_name(v)}, {"max_level", level}, {"examined", c.examined}},
                text.str());
}

int cmd_validate(const Options& o) {
  const Fixture f = load(o);
  const TruncatedCubicalSet x = cells_for(o, f);
  std::ostringstream text;
  text << x.name << ": truncation " << x.truncation() << ", " << variant_name(x.variant()) << "\n";
  return finish(o, validate(x), {{"name", x.name}, {"variant", variant_name(x.variant())}},
                text.str());
}

int cmd_free_strict(const Options& o) {
  const Fixture f = load(o);
  FreeStrictOptions opt;
  opt.max_dim = o.max_dim < 0 ? 1 : o.max_dim;
  opt.depth = o.depth < 0 ? 3 : o.depth;
  opt.reversors = o.reversors;
  const auto q = free_strict(std::make_shared<const TruncatedCubicalSet>(cells_for(o, f)), opt);
  const auto& cells = q.tables.cells;
  json dims = json::array();
  std::ostringstream text;
  text << "universe " << q.universe.size() << " terms, " << q.class_count() << " classes\n";
  for (int d = 0; d <= opt.max_dim; ++d) {
    json cls = json::array();
    text << "dimension " << d << ": " << cells.size(d) << " classes\n";
    for (int k = 0; k < cells.size(d); ++k) {
      const std::size_t members = q.members(d, k).size();
      cls.push_back({{"representative", cells.label(d, k)}, {"members", members}});
      text << "  " << cells.label(d, k) << "  (" << members << " terms)\n";
    }
    dims.push_back({{"dim", d}, {"classes", cls}});
  }
  return finish(o, check_strict_axioms(q.tables),
                {{"universe", q.universe.size()}, {"dimensions", dims}}, text.str());
}

int cmd_check_strict(const Options& o) {
  const Fixture f = load(o);
  if (!f.has_compositions) throw CapabilityError("fixture has no `compositions`");
  return finish(o, check_strict_axioms(f.instance), {{"name", f.instance.name()}});
}

int cmd_check_reversors(const Options& o) {
  const Fixture f = load(o);
  if (!f.instance.reversors) throw CapabilityError("fixture has no `reversors`");
  const auto& c = f.instance;
  const auto& r = *c.reversors;
  Report out = f.structure ? check_structure_declaration(c.cells, r, *f.structure)
                           : check_reversor_shape(c.cells, r);
  if (f.has_compositions && has_degeneracies(c.cells.variant()))
    for (auto& v : check_strict_inverses(c, r, r.m)) out.push_back(std::move(v));
  return finish(o, out, {{"name", c.name()}, {"m", r.m}});
}

int cmd_weak_cells(const Options& o) {
  const Fixture f = load(o);
  FreeWeakOptions opt;
  opt.max_dim = o.max_dim < 0 ? 2 : o.max_dim;
  opt.depth = o.depth < 0 ? 3 : o.depth;
  opt.connection_brackets = !o.no_connection_brackets;
  const Stretching s = free_weak(std::make_shared<const TruncatedCubicalSet>(cells_for(o, f)), opt);
  auto& st = *s.store;
  const auto& classes = s.strict->tables.cells;
  json terms = json::array();
  std::ostringstream text;
  for (TermId t : s.terms) {
    const int n = st.dim(t);
    const auto [pd, pk] = s.pi(t);
    json faces = json::array();
    std::string line = st.print(t) + "  dim " + std::to_string(n) + "  π " + classes.label(pd, pk);
    for (int j = 1; j <= n; ++j) {
      const std::string a = st.print(st.face(t, Sign::Minus, j));
      const std::string b = st.print(st.face(t, Sign::Plus, j));
      faces.push_back({{"j", j}, {"s", a}, {"t", b}});
      line += "  s_" + std::to_string(j) + " " + a + "  t_" + std::to_string(j) + " " + b;
    }
    terms.push_back({{"term", st.print(t)}, {"dim", n}, {"pi", classes.label(pd, pk)}, {"faces", faces}});
    text << line << "\n";
  }
  text << s.terms.size() << " terms\n";
  json tally = json::object();
  for (const auto& [k, v] : s.tally) {
    tally[k] = v;
    text << "skipped " << k << ": " << v << "\n";
  }
  return finish(o, check_stretching(s), {{"terms", terms}, {"skipped", tally}}, text.str());
}

int cmd_check_transformations(const Options& o) {
  const Fixture f = load(o);
  if (f.family.functors.empty()) throw CapabilityError("fixture has no `functors`");
  Report r;
  try {
    r = check_cubical_2cat(f.family);
  } catch (const ClosureError& e) {
    r = check_family_members(f.family);
    for (const auto& m : e.missing) r.push_back({"closure", "missing " + m});
  }
  std::ostringstream text;
  text << f.family.instances.size() << " instances, " << f.family.functors.size() << " functors, "
       << f.family.transformations.size() << " transformations\n";
  return finish(o, r, {{"instances", f.family.instances.size()},
                       {"functors", f.family.functors.size()},
                       {"transformations", f.family.transformations.size()}},
                text.str());
}

int cmd_demo_coherence(const Options& o) {
  const CoherenceDemo d = coherence_cells_demo(o.opposite);
  auto& st = *d.stretching.store;
  json cells = json::array();
  for (const auto& c : d.cells) {
    json faces = json::object();
    static const char* names[4] = {"s_1", "t_1", "s_2", "t_2"};
    for (int i = 0; i < 4; ++i) faces[names[i]] = {{"term", st.print(c.faces[i])}, {"figure", c.figure[i]}};
    cells.push_back({{"name", c.name}, {"term", st.print(c.term)}, {"faces", faces}});
  }
  return finish(o, check_coherence_demo(d),
                {{"x", st.print(d.x)}, {"y", st.print(d.y)}, {"cells", cells}}, d.table());
}

int cmd_fixture(const Options& o) {
  Fixture f;
  if (o.name == "integer-loop-family" || o.name == "s3-family") {
    f.family = o.name == "s3-family" ? fixtures::s3_conjugation_family()
                                     : fixtures::integer_loop_family(3);
    f.instance = *f.family.instances.front();
    f.has_compositions = true;
  } else {
    f.instance = fixtures::builtin_instance(o.name);
    f.has_compositions = false;
    for (const auto& row : f.instance.comp)
      for (const auto& t : row) f.has_compositions |= !t.empty();
  }
  std::cout << emit_fixture(f);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubikit: cubical sets, strict and weak cubical categories"};
  app.require_subcommand(1);
  Options o;

  auto format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto variant = [&](CLI::App* s) {
    s->add_option("--variant", o.variant, "plain, semireflexive or reflexive")
        ->check(CLI::IsMember({"plain", "semireflexive", "reflexive"}));
  };
  auto fixture = [&](CLI::App* s) {
    s->add_option("fixture", o.fixture, "Fixture JSON file")->required();
  };
  auto bounds = [&](CLI::App* s) {
    s->add_option("--max-dim", o.max_dim, "Largest term dimension")->check(CLI::Range(0, 6));
    s->add_option("--depth", o.depth, "Term depth bound")->check(CLI::Range(1, 12));
  };

  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form of a word of the site");
  normalize_cmd->add_option("word", o.word, "e.g. s{2,1}.s{3,2}")->required();
  variant(normalize_cmd);
  format(normalize_cmd);

  auto* hom = app.add_subcommand("hom", "Hom-set classes m -> n up to a word length");
  hom->add_option("m", o.m)->required()->check(CLI::Range(0, 12));
  hom->add_option("n", o.n)->required()->check(CLI::Range(0, 12));
  hom->add_option("--max-len", o.max_len, "Word length bound")->check(CLI::Range(0, 12));
  variant(hom);
  format(hom);

  auto* confluence = app.add_subcommand("confluence", "Local confluence of the rewriting rules");
  confluence->add_option("--max-dim", o.max_dim, "Largest generator level")->check(CLI::Range(1, 8));
  confluence->add_option("--max-len", o.max_len, "Overlap length")->check(CLI::Range(0, 6));
  variant(confluence);
  format(confluence);

  auto* validate_cmd = app.add_subcommand("validate", "Relations of a fixture's cubical set");
  fixture(validate_cmd);
  variant(validate_cmd);
  format(validate_cmd);

  auto* free = app.add_subcommand("free-strict", "Bounded free strict cubical category");
  fixture(free);
  bounds(free);
  free->add_flag("--reversors", o.reversors, "Add formal inverses (groupoid)");
  variant(free);
  format(free);

  auto* strict = app.add_subcommand("check-strict", "Strict axioms of a fixture's compositions");
  fixture(strict);
  format(strict);

  auto* rev = app.add_subcommand("check-reversors", "Reversor shape, inverses and structure");
  fixture(rev);
  format(rev);

  auto* weak = app.add_subcommand("weak-cells", "Cells of the bounded free stretching");
  fixture(weak);
  bounds(weak);
  weak->add_flag("--no-connection-brackets", o.no_connection_brackets, "Plain brackets only");
  variant(weak);
  format(weak);

  auto* trans = app.add_subcommand("check-transformations", "Strict cubical 2-category of a family");
  fixture(trans);
  format(trans);

  auto* demo = app.add_subcommand("demo-coherence", "Associativity coherence cells");
  demo->add_flag("--opposite", o.opposite, "Literal symbols on the opposite path");
  format(demo);

  auto* fix = app.add_subcommand("fixture", "Print a built-in fixture as JSON");
  fix->add_option("name", o.name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*normalize_cmd) return cmd_normalize(o);
    if (*hom) return cmd_hom(o);
    if (*confluence) return cmd_confluence(o);
    if (*validate_cmd) return cmd_validate(o);
    if (*free) return cmd_free_strict(o);
    if (*strict) return cmd_check_strict(o);
    if (*rev) return cmd_check_reversors(o);
    if (*weak) return cmd_weak_cells(o);
    if (*trans) return cmd_check_transformations(o);
    if (*demo) return cmd_demo_coherence(o);
    if (*fix) return cmd_fixture(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\npartial: " << e.partial << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
