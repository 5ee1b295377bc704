#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "qd/fixtures.hpp"
#include "qd/io.hpp"
#include "qd/parse.hpp"

using namespace qd;
using io::json;

namespace {

enum Exit { ok = 0, schema = 1, math = 2, cap = 3 };

struct Options {
  std::string output = "text";
  std::optional<int> truncate;
  std::optional<std::uint64_t> max_steps;
  std::uint64_t seed = 1;
};

Options opts;

Limits limits() {
  Limits l;
  l.max_steps = opts.max_steps;
  l.seed = opts.seed;
  return l;
}

bool json_out() { return opts.output == "json"; }

void emit(const json& j, const std::string& text) {
  if (json_out()) std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

struct LoadedSystem {
  ReductionSystem r;
  json doc;
  std::optional<Fixture> fx;
};

// A system argument is a file, or else the name of a bundled fixture.
LoadedSystem load_system(const std::string& arg) {
  LoadedSystem ls;
  if (std::filesystem::exists(arg)) {
    ls.doc = io::read_file(arg);
    ls.r = io::system_from_json(ls.doc);
  } else {
    ls.fx = fixture(arg);
    ls.r = ls.fx->system;
    ls.doc = io::system_to_json(ls.r);
  }
  return ls;
}

DeformationMap load_phi(const LoadedSystem& ls, const std::string& arg) {
  if (std::filesystem::exists(arg)) return io::phi_from_json(ls.r.quiver(), io::read_file(arg));
  if (ls.fx) return ls.fx->family(arg);
  throw io::SchemaError("cannot open '" + arg + "'");
}

std::string pad(const std::string& s, std::size_t n) { return s.size() >= n ? s : s + std::string(n - s.size(), ' '); }

int cmd_validate(const std::string& sys) {
  LoadedSystem ls = load_system(sys);
  const Quiver& q = ls.r.quiver();
  ValidationReport v = validate(ls.r);
  auto order = io::stated_order(ls.r, ls.doc);
  std::optional<TerminationReport> t;
  if (order) t = check_termination(ls.r, *order);
  std::ostringstream os;
  os << "pairs: " << ls.r.size() << "\n";
  for (const auto& x : v.violations) os << "violation (" << to_string(x.kind) << "): " << x.message << "\n";
  os << (v.ok() ? "Bergman conditions: ok\n" : "Bergman conditions: FAIL\n");
  if (!t) {
    os << "termination: no order given\n";
  } else {
    for (const auto& [pair, path, cmp] : t->failures)
      os << "  pair " << pair << ": " << path.to_string(q) << " is " << to_string(cmp) << " than "
         << ls.r.pair(pair).lhs.to_string(q) << "\n";
    os << (t->ok ? "termination: certified by the stated order\n" : "termination: order does NOT certify\n");
  }
  emit(io::validation_to_json(q, v, t ? &*t : nullptr), os.str());
  return v.ok() && (!t || t->ok) ? ok : math;
}

int cmd_diamond(const std::string& sys) {
  LoadedSystem ls = load_system(sys);
  ConfluenceReport rep = check_diamond(ls.r, limits());
  const Quiver& q = ls.r.quiver();
  emit(io::confluence_to_json(q, rep), rep.to_text(q));
  if (rep.count(OverlapStatus::cap)) return cap;
  return rep.confluent() ? ok : math;
}

int cmd_nf(const std::string& sys, const std::string& text, const std::string& strategy, bool trace) {
  LoadedSystem ls = load_system(sys);
  const Quiver& q = ls.r.quiver();
  AlgebraElement a = parse_element(q, scalar_ring(), text);
  Limits l = limits();
  l.record_trace = trace;
  NormalFormResult res = normal_form(a, ls.r, parse_strategy(strategy), l);
  std::ostringstream os;
  os << res.value.to_string(q) << "\n";
  if (trace)
    for (const auto& s : res.trace.steps)
      os << "  " << s.term.to_string(q) << " @" << s.start << " by " << ls.r.pair(s.pair).lhs.to_string(q) << "\n";
  os << res.trace.count << " steps" << (res.trace.terminated ? "" : " (step cap reached)") << "\n";
  emit({{"input", a.to_string(q)}, {"value", io::element_to_json(q, res.value)}, {"text", res.value.to_string(q)},
        {"trace", io::trace_to_json(q, ls.r, res.trace)}},
       os.str());
  return res.trace.terminated ? ok : cap;
}

int cmd_ambiguities(const std::string& sys, int degree) {
  LoadedSystem ls = load_system(sys);
  const Quiver& q = ls.r.quiver();
  auto amb = enumerate(ls.r, degree);
  std::ostringstream os;
  os << "S_" << degree + 2 << " (" << amb.size() << " elements)\n";
  for (const auto& a : amb) os << "  " << a.to_string(q) << "\n";
  emit({{"degree", degree}, {"index", degree + 2}, {"elements", io::ambiguities_to_json(q, amb)}}, os.str());
  return ok;
}

int cmd_star(const std::string& sys, const std::string& phi_arg, const std::string& a_text, const std::string& b_text) {
  LoadedSystem ls = load_system(sys);
  const Quiver& q = ls.r.quiver();
  DeformationMap phi = load_phi(ls, phi_arg);
  if (opts.truncate) phi = phi.with_truncation(Truncation::at(*opts.truncate));
  else if (!phi.truncation_stated) phi = phi.with_truncation(effective_truncation(ls.r, phi));
  StarProduct star(ls.r, phi, limits());
  AlgebraElement a = parse_element(q, phi.ring, a_text), b = parse_element(q, phi.ring, b_text);
  AlgebraElement v = star(star.project(a), star.project(b));
  emit({{"a", a.to_string(q)},
        {"b", b.to_string(q)},
        {"truncation", phi.ring->truncation().describe()},
        {"value", io::element_to_json(q, v)},
        {"text", v.to_string(q)}},
       v.to_string(q) + "\n");
  return ok;
}

int cmd_mc(const std::string& sys, const std::string& phi_arg) {
  LoadedSystem ls = load_system(sys);
  const Quiver& q = ls.r.quiver();
  DeformationMap phi = load_phi(ls, phi_arg);
  for (const auto& p : check_deformation_map(ls.r, phi)) throw io::SchemaError(p);
  MCOptions o;
  if (opts.truncate) o.truncation = Truncation::at(*opts.truncate);
  o.limits = limits();
  MCReport rep = mc_check(ls.r, phi, o);
  emit(io::mc_to_json(q, rep), rep.to_text(q));
  return rep.pass ? ok : math;
}

int cmd_variety(const std::string& sys, const std::string& fam) {
  LoadedSystem ls = load_system(sys);
  DeformationMap phi = load_phi(ls, fam);
  for (const auto& p : check_deformation_map(ls.r, phi)) throw io::SchemaError(p);
  MCOptions o;
  if (opts.truncate) o.truncation = Truncation::at(*opts.truncate);
  o.limits = limits();
  MCReport rep = mc_check(ls.r, phi, o);
  auto eqs = residual_equations(rep);
  std::ostringstream os;
  for (const auto& e : eqs) os << e.to_string() << " = 0\n";
  os << eqs.size() << " equations (" << rep.truncation.describe() << ")\n";
  emit({{"truncation", rep.truncation.describe()}, {"equations", io::equations_to_json(eqs)}}, os.str());
  return ok;
}

int cmd_cocycle(const std::string& sys, const std::string& phi_arg) {
  LoadedSystem ls = load_system(sys);
  const Quiver& q = ls.r.quiver();
  DeformationMap phi = load_phi(ls, phi_arg);
  for (const auto& p : check_deformation_map(ls.r, phi)) throw io::SchemaError(p);
  CocycleReport rep = cocycle_check(ls.r, phi, limits());
  std::ostringstream os;
  if (!rep.homogeneous) os << "not homogeneous of degree 1 in the parameters\n";
  os << rep.mc.to_text(q) << (rep.pass() ? "cocycle: pass\n" : "cocycle: FAIL\n");
  emit({{"pass", rep.pass()}, {"homogeneous", rep.homogeneous}, {"mc", io::mc_to_json(q, rep.mc)}}, os.str());
  return rep.pass() ? ok : math;
}

int cmd_degcond(const std::string& sys, const std::string& phi_arg, const std::string& subset,
                const std::string& provenance) {
  LoadedSystem ls = load_system(sys);
  const Quiver& q = ls.r.quiver();
  DeformationMap phi = load_phi(ls, phi_arg);
  if (!ls.r.certificate()) throw io::SchemaError("degcond needs a system with a certifying order");
  std::optional<std::set<Path>> restrict_to;
  if (subset == "S0") {
    std::set<Path> s0;
    if (ls.fx && ls.fx->diagram) {
      s0 = ls.fx->diagram->lhs_with_origin(Origin::R0);
    } else if (!provenance.empty()) {
      json doc = io::read_file(provenance);
      for (const auto& p : doc.at("pairs"))
        if (p.at("origin") == "R0") s0.insert(io::path_from_json(q, p.at("lhs")));
    } else {
      throw io::SchemaError("--subset S0 needs a diagram fixture or --provenance");
    }
    restrict_to = s0;
  } else if (!subset.empty() && subset != "all") {
    std::set<Path> s;
    std::stringstream ss(subset);
    for (std::string item; std::getline(ss, item, ',');) s.insert(Path::parse(q, item));
    restrict_to = s;
  }
  DegreeReport rep = degree_condition(phi, *ls.r.certificate(), restrict_to);
  std::ostringstream os;
  for (const auto& [s, p] : rep.failures) os << "  " << p.to_string(q) << " is not below " << s.to_string(q) << "\n";
  os << (rep.ok ? "degree condition: holds" : "degree condition: FAILS") << " on "
     << (restrict_to ? std::to_string(restrict_to->size()) + " lhs" : std::string("all of S")) << "\n";
  json j = io::degree_to_json(q, rep);
  j["subset"] = subset.empty() ? "all" : subset;
  emit(j, os.str());
  return rep.ok ? ok : math;
}

int cmd_build_diagram(const std::string& cover_file, std::string prefix) {
  CoverSpec c = io::cover_from_json(io::read_file(cover_file));
  BuiltDiagram d = build(c);
  if (prefix.empty()) prefix = std::filesystem::path(cover_file).stem().string();
  io::write_file(prefix + "-system.json", io::system_to_json(d.system));
  io::write_file(prefix + "-provenance.json", io::provenance_to_json(d));
  std::ostringstream os;
  os << d.quiver->vertices().size() << " vertices, " << d.quiver->arrows().size() << " arrows, " << d.system.size()
     << " pairs" << (d.system.certificate() ? ", order certified" : ", order NOT certified") << "\n";
  for (std::size_t i = 0; i < d.system.size(); ++i)
    os << "  " << pad(to_string(d.provenance[i].origin), 4) << d.system.pair(i).lhs.to_string(*d.quiver) << " -> "
       << d.system.pair(i).rhs.to_string(*d.quiver) << "\n";
  os << "wrote " << prefix << "-system.json, " << prefix << "-provenance.json\n";
  emit({{"system", prefix + "-system.json"},
        {"provenance", prefix + "-provenance.json"},
        {"vertices", d.quiver->vertices().size()},
        {"arrows", d.quiver->arrows().size()},
        {"pairs", d.system.size()},
        {"certified", d.system.certificate().has_value()}},
       os.str());
  return ok;
}

int cmd_hypersurface(const std::string& file, int m, const std::string& candidate) {
  HypersurfacePresentation h = io::hypersurface_from_json(io::read_file(file));
  HypersurfaceSystem s = build_system(h);
  const Quiver& q = *s.quiver;
  auto rows = bach_basis(h, q, m);
  auto cols = bach_basis(h, q, m + 1);
  json jr = json::array(), jc = json::array(), matrix = json::array();
  for (const auto& b : rows) jr.push_back(b.label(h));
  for (const auto& b : cols) jc.push_back(b.label(h));
  std::ostringstream os;
  os << "system:\n";
  for (const auto& p : s.system.pairs()) os << "  " << p.lhs.to_string(q) << " -> " << p.rhs.to_string(q) << "\n";
  os << "S_" << m + 2 << ": " << rows.size() << " elements; d into S_" << m + 3 << ":\n";
  for (const auto& b : rows) {
    BachCochain img = differential(s, h, AlgebraElement::of(Path::trivial(0)), b);
    json row = json::array();
    os << "  d(e_" << b.label(h) << ") =";
    bool any = false;
    for (const auto& c : cols) {
      auto it = img.find(c);
      std::string v = it == img.end() ? "0" : it->second.to_string(q);
      row.push_back(v);
      if (it != img.end()) {
        os << (any ? " + " : " ") << "(" << v << ") e_" << c.label(h);
        any = true;
      }
    }
    os << (any ? "" : " 0") << "\n";
    matrix.push_back(row);
  }
  json out{{"system", io::system_to_json(s.system)},
           {"degree", m},
           {"basis", jr},
           {"next_basis", jc},
           {"differential", matrix}};
  int code = ok;
  if (!candidate.empty()) {
    DeformationMap phi = io::phi_from_json(q, io::read_file(candidate));
    HH2Verdict v = verify_hh2_candidate(s, h, phi, limits());
    out["candidate"] = io::hh2_to_json(q, v);
    os << "candidate: " << (v.pass() ? "pass" : "FAIL") << " (" << to_string(v.kind) << ")\n";
    for (const auto& [where, e] : v.n_residuals) os << "  condition at " << where << ": " << e.to_string(q) << "\n";
    if (!v.pass()) code = math;
  }
  emit(out, os.str());
  return code;
}

std::string safe(const std::string& s) {
  std::string out;
  for (char c : s) out += (c == '/' ? '-' : c);
  return out;
}

int cmd_example(const std::string& name, const std::string& dir) {
  Fixture fx = fixture(name);
  std::filesystem::create_directories(dir);
  auto at = [&](const std::string& f) { return (std::filesystem::path(dir) / f).string(); };
  std::vector<std::string> written;
  auto put = [&](const std::string& f, const json& j) {
    io::write_file(at(f), j);
    written.push_back(at(f));
  };
  put(name + "-system.json", io::system_to_json(fx.system));
  for (const auto& [fam, phi] : fx.families) put(name + "-" + safe(fam) + ".json", io::phi_to_json(fx.system.quiver(), phi));
  if (fx.cover) put(name + "-cover.json", io::cover_to_json(*fx.cover));
  if (fx.diagram) put(name + "-provenance.json", io::provenance_to_json(*fx.diagram));
  if (fx.hypersurface) put(name + "-h.json", io::hypersurface_to_json(*fx.hypersurface));
  std::ostringstream os;
  for (const auto& w : written) os << "wrote " << w << "\n";
  emit({{"written", written}}, os.str());
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduction systems, overlaps and deformations of path algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", opts.output, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--truncate", opts.truncate, "Work modulo the parameter ideal to the power N+1");
  app.add_option("--max-steps", opts.max_steps, "Step cap for every reduction");
  app.add_option("--seed", opts.seed, "Seed for the random strategy");

  std::string sys, phi, a, b, text, strategy = "rightmost", subset, provenance, file, prefix, candidate, name,
                                     dir = ".";
  int degree = 1, bach = 0;
  bool trace = false;
  std::function<int()> run;

  auto* v = app.add_subcommand("validate", "Bergman conditions and termination certificate");
  v->add_option("system", sys)->required();
  v->callback([&] { run = [&] { return cmd_validate(sys); }; });

  auto* d = app.add_subcommand("diamond", "Resolve every overlap");
  d->add_option("system", sys)->required();
  d->callback([&] { run = [&] { return cmd_diamond(sys); }; });

  auto* n = app.add_subcommand("nf", "Normal form of an element");
  n->add_option("system", sys)->required();
  n->add_option("element", text)->required();
  n->add_option("--strategy", strategy)->check(CLI::IsMember({"rightmost", "leftmost", "random"}));
  n->add_flag("--trace", trace);
  n->callback([&] { run = [&] { return cmd_nf(sys, text, strategy, trace); }; });

  auto* am = app.add_subcommand("ambiguities", "List the n-ambiguities");
  am->add_option("system", sys)->required();
  am->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
  am->callback([&] { run = [&] { return cmd_ambiguities(sys, degree); }; });

  auto* st = app.add_subcommand("star", "Deformed product of two elements");
  st->add_option("system", sys)->required();
  st->add_option("phi", phi)->required();
  st->add_option("a", a)->required();
  st->add_option("b", b)->required();
  st->callback([&] { run = [&] { return cmd_star(sys, phi, a, b); }; });

  auto* mc = app.add_subcommand("mc", "Maurer-Cartan check on all overlaps");
  mc->add_option("system", sys)->required();
  mc->add_option("phi", phi)->required();
  mc->callback([&] { run = [&] { return cmd_mc(sys, phi); }; });

  auto* va = app.add_subcommand("variety", "Equations cut out by the Maurer-Cartan condition");
  va->add_option("system", sys)->required();
  va->add_option("family", phi)->required();
  va->callback([&] { run = [&] { return cmd_variety(sys, phi); }; });

  auto* co = app.add_subcommand("cocycle", "First-order check");
  co->add_option("system", sys)->required();
  co->add_option("phi", phi)->required();
  co->callback([&] { run = [&] { return cmd_cocycle(sys, phi); }; });

  auto* dc = app.add_subcommand("degcond", "Degree condition against the system's order");
  dc->add_option("system", sys)->required();
  dc->add_option("phi", phi)->required();
  dc->add_option("--subset", subset, "S0, all, or comma-separated lhs paths");
  dc->add_option("--provenance", provenance, "Provenance file for --subset S0");
  dc->callback([&] { run = [&] { return cmd_degcond(sys, phi, subset, provenance); }; });

  auto* bd = app.add_subcommand("build-diagram", "Assemble the diagram system from a cover");
  bd->add_option("cover", file)->required();
  bd->add_option("--prefix", prefix, "Output file prefix");
  bd->callback([&] { run = [&] { return cmd_build_diagram(file, prefix); }; });

  auto* hy = app.add_subcommand("hypersurface", "Hypersurface system, basis and differential");
  hy->add_option("presentation", file)->required();
  hy->add_option("--bach-degree", bach)->check(CLI::NonNegativeNumber);
  hy->add_option("--candidate", candidate, "First-order candidate to verify");
  hy->callback([&] { run = [&] { return cmd_hypersurface(file, bach, candidate); }; });

  std::string patterns;
  for (const auto& p : fixture_patterns()) patterns += (patterns.empty() ? "" : ", ") + p;
  auto* ex = app.add_subcommand("example", "Write a bundled fixture: " + patterns);
  ex->add_option("name", name)->required();
  ex->add_option("--dir", dir);
  ex->callback([&] { run = [&] { return cmd_example(name, dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : schema;
  }
  try {
    return run();
  } catch (const LimitExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return cap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return schema;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return schema;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return schema;
  }
}
