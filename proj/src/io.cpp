#include "qd/io.hpp"

#include <fstream>
#include <limits>

#include "qd/parse.hpp"

namespace qd::io {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return need(j, key).get<T>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("field '") + key + "': " + e.what());
  }
}

json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

mpz_class integer_from(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw SchemaError("expected an integer, got " + j.dump());
}

json labels(const Quiver& q, const Path& p) {
  json a = json::array();
  for (const auto& l : p.labels(q)) a.push_back(l);
  return a;
}

}  // namespace

json rational_to_json(const Rational& r) { return json{{"num", integer(r.get_num())}, {"den", integer(r.get_den())}}; }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return Rational(integer_from(j));
  Rational r(integer_from(need(j, "num")), j.contains("den") ? integer_from(j.at("den")) : mpz_class(1));
  if (r.get_den() == 0) throw SchemaError("zero denominator");
  r.canonicalize();
  return r;
}

json quiver_to_json(const Quiver& q) {
  json v = json::array(), a = json::array();
  for (const auto& x : q.vertices()) v.push_back({{"label", x.label}});
  for (const auto& x : q.arrows())
    a.push_back({{"label", x.label}, {"source", q.vertex(x.source).label}, {"target", q.vertex(x.target).label}});
  return {{"vertices", v}, {"arrows", a}};
}

QuiverPtr quiver_from_json(const json& j) {
  auto q = std::make_shared<Quiver>();
  try {
    for (const auto& v : need(j, "vertices")) q->add_vertex(v.is_string() ? v.get<std::string>() : get<std::string>(v, "label"));
    for (const auto& a : need(j, "arrows"))
      q->add_arrow(get<std::string>(a, "label"), get<std::string>(a, "source"), get<std::string>(a, "target"));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(std::string("quiver: ") + e.what());
  }
  return q;
}

json path_to_json(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return {{"e", q.vertex(p.source()).label}};
  return labels(q, p);
}

Path path_from_json(const Quiver& q, const json& j) {
  if (j.is_string()) return Path::parse(q, j.get<std::string>());
  if (j.is_object()) return Path::trivial(q.vertex_id(get<std::string>(j, "e")));
  if (!j.is_array() || j.empty()) throw SchemaError("path must be a nonempty label array, {\"e\": vertex} or text");
  std::vector<std::string> ls;
  for (const auto& x : j) ls.push_back(x.get<std::string>());
  return Path::from_labels(q, ls);
}

json poly_to_json(const ParamPoly& p) {
  json m = json::array();
  // Highest degree first, matching the text form.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    json t = rational_to_json(it->second);
    json e = json::array();
    for (auto x : it->first) e.push_back(x);
    m.push_back({{"exps", e}, {"num", t["num"]}, {"den", t["den"]}});
  }
  return {{"monomials", m}};
}

ParamPoly poly_from_json(const RingPtr& ring, const json& j) {
  if (j.is_string()) return parse_poly(ring, j.get<std::string>());
  if (j.is_number_integer()) return ParamPoly::constant(ring, rational_from_json(j));
  ParamPoly out(ring);
  for (const auto& m : need(j, "monomials")) {
    Exponents e;
    for (const auto& x : need(m, "exps")) e.push_back(x.get<std::uint16_t>());
    if (e.size() != ring->size())
      throw SchemaError("monomial has " + std::to_string(e.size()) + " exponents for " + std::to_string(ring->size()) +
                        " parameters");
    out.add_term(e, rational_from_json(m));
  }
  return out;
}

json element_to_json(const Quiver& q, const AlgebraElement& a) {
  json t = json::array();
  for (const auto& [p, c] : a.terms()) t.push_back({{"path", path_to_json(q, p)}, {"coeff", poly_to_json(c)}});
  return {{"terms", t}};
}

AlgebraElement element_from_json(const Quiver& q, const RingPtr& ring, const json& j,
                                 std::optional<int> default_vertex) {
  if (j.is_string()) return parse_element(q, ring, j.get<std::string>(), default_vertex);
  if (j.is_number_integer()) return parse_element(q, ring, j.dump(), default_vertex);
  AlgebraElement out(ring);
  for (const auto& t : need(j, "terms")) out.add_term(path_from_json(q, need(t, "path")), poly_from_json(ring, need(t, "coeff")));
  return out;
}

json order_to_json(const Quiver& q, const AdmissibleOrder& o) {
  json stages = json::array();
  for (const auto& s : o.stages()) {
    json w = json::object();
    for (std::size_t a = 0; a < s.size(); ++a) w[q.arrow(a).label] = s[a];
    stages.push_back(w);
  }
  json prec = json::array();
  for (int a : o.precedence()) prec.push_back(q.arrow(a).label);
  return {{"length_first", o.length_first()}, {"stages", stages}, {"precedence", prec}};
}

AdmissibleOrder order_from_json(const Quiver& q, const json& j) {
  std::vector<AdmissibleOrder::Weights> stages;
  if (j.contains("stages"))
    for (const auto& s : j.at("stages")) {
      AdmissibleOrder::Weights w(q.arrows().size(), 0);
      for (const auto& [label, val] : s.items()) w[q.arrow_id(label)] = val.get<std::int64_t>();
      stages.push_back(std::move(w));
    }
  std::vector<int> prec;
  if (j.contains("precedence")) {
    for (const auto& l : j.at("precedence")) prec.push_back(q.arrow_id(l.get<std::string>()));
  } else {
    prec.resize(q.arrows().size());
    for (std::size_t i = 0; i < prec.size(); ++i) prec[i] = static_cast<int>(i);
  }
  bool lf = j.contains("length_first") ? j.at("length_first").get<bool>() : true;
  try {
    return AdmissibleOrder(q, lf, std::move(stages), std::move(prec));
  } catch (const Error& e) {
    throw SchemaError(std::string("order: ") + e.what());
  }
}

json system_to_json(const ReductionSystem& r) {
  const Quiver& q = r.quiver();
  json pairs = json::array();
  for (const auto& p : r.pairs()) pairs.push_back({{"lhs", labels(q, p.lhs)}, {"rhs", element_to_json(q, p.rhs)}});
  return {{"quiver", quiver_to_json(q)},
          {"pairs", pairs},
          {"order", r.certificate() ? order_to_json(q, *r.certificate()) : json(nullptr)}};
}

ReductionSystem system_from_json(const json& j) {
  QuiverPtr q = quiver_from_json(need(j, "quiver"));
  std::vector<ReductionPair> pairs;
  for (const auto& p : need(j, "pairs")) {
    Path lhs = path_from_json(*q, need(p, "lhs"));
    pairs.push_back({lhs, element_from_json(*q, scalar_ring(), need(p, "rhs"), lhs.source())});
  }
  ReductionSystem r(q, std::move(pairs));
  auto o = stated_order(r, j);
  if (o && check_termination(r, *o).ok) return r.with_certificate(*o);
  return r;
}

std::optional<AdmissibleOrder> stated_order(const ReductionSystem& r, const json& j) {
  if (!j.contains("order") || j.at("order").is_null()) return std::nullopt;
  return order_from_json(r.quiver(), j.at("order"));
}

json phi_to_json(const Quiver& q, const DeformationMap& phi) {
  json entries = json::array();
  for (const auto& [s, v] : phi.entries) entries.push_back({{"s", labels(q, s)}, {"value", element_to_json(q, v)}});
  json out{{"params", phi.ring->names()}, {"entries", entries}};
  if (phi.truncation_stated) {
    const Truncation& t = phi.ring->truncation();
    out["truncation"] = t.exact ? json{{"mode", "exact"}} : json{{"mode", "truncate"}, {"N", t.order}};
  }
  return out;
}

DeformationMap phi_from_json(const Quiver& q, const json& j) {
  DeformationMap phi;
  Truncation t;
  phi.truncation_stated = j.contains("truncation") && !j.at("truncation").is_null();
  if (phi.truncation_stated) {
    const json& tj = j.at("truncation");
    std::string mode = get<std::string>(tj, "mode");
    if (mode == "truncate") t = Truncation::at(get<int>(tj, "N"));
    else if (mode != "exact") throw SchemaError("truncation mode must be 'exact' or 'truncate'");
  }
  phi.ring = make_ring(j.contains("params") ? j.at("params").get<std::vector<std::string>>() : std::vector<std::string>{}, t);
  for (const auto& e : need(j, "entries")) {
    Path s = path_from_json(q, need(e, "s"));
    AlgebraElement v = element_from_json(q, phi.ring, need(e, "value"), s.source());
    if (!v.is_zero()) phi.entries[s] = v;
  }
  return phi;
}

json cover_to_json(const CoverSpec& c) {
  json charts = json::array();
  for (const auto& ch : c.charts) {
    json pairs = json::array();
    for (const auto& p : ch.pairs) pairs.push_back({{"lhs", p.lhs}, {"rhs", p.rhs}});
    json stages = json::array();
    for (const auto& s : ch.order.weight_stages) {
      json w = json::object();
      for (const auto& [g, v] : s) w[g] = v;
      stages.push_back(w);
    }
    charts.push_back({{"label", ch.label},
                      {"indices", ch.indices},
                      {"generators", ch.generators},
                      {"pairs", pairs},
                      {"order", {{"weight_stages", stages}, {"precedence", ch.order.precedence}}}});
  }
  json res = json::array();
  for (const auto& r : c.restrictions) {
    json im = json::object();
    for (const auto& [g, v] : r.images) im[g] = v;
    res.push_back({{"arrow", r.arrow}, {"from", r.from}, {"to", r.to}, {"images", im}});
  }
  return {{"n", c.n}, {"charts", charts}, {"restrictions", res}};
}

CoverSpec cover_from_json(const json& j) {
  CoverSpec c;
  try {
    c.n = get<int>(j, "n");
    for (const auto& ch : need(j, "charts")) {
      ChartSpec s;
      s.label = get<std::string>(ch, "label");
      s.indices = get<std::vector<int>>(ch, "indices");
      s.generators = get<std::vector<std::string>>(ch, "generators");
      if (ch.contains("pairs"))
        for (const auto& p : ch.at("pairs")) s.pairs.push_back({get<std::vector<std::string>>(p, "lhs"), get<std::string>(p, "rhs")});
      if (ch.contains("order")) {
        const json& o = ch.at("order");
        if (o.contains("weight_stages"))
          for (const auto& st : o.at("weight_stages")) s.order.weight_stages.push_back(st.get<std::map<std::string, std::int64_t>>());
        if (o.contains("precedence")) s.order.precedence = o.at("precedence").get<std::vector<std::string>>();
      }
      if (s.order.precedence.empty()) s.order.precedence = s.generators;
      c.charts.push_back(std::move(s));
    }
    for (const auto& r : need(j, "restrictions"))
      c.restrictions.push_back({get<std::string>(r, "arrow"), get<std::string>(r, "from"), get<std::string>(r, "to"),
                                get<std::map<std::string, std::string>>(r, "images")});
  } catch (const json::exception& e) {
    throw SchemaError(std::string("cover: ") + e.what());
  }
  return c;
}

json provenance_to_json(const BuiltDiagram& d) {
  const Quiver& q = *d.quiver;
  json pairs = json::array();
  for (std::size_t i = 0; i < d.system.size(); ++i)
    pairs.push_back({{"lhs", labels(q, d.system.pair(i).lhs)},
                     {"origin", to_string(d.provenance[i].origin)},
                     {"charts", d.provenance[i].charts}});
  return {{"pairs", pairs}};
}

json hypersurface_to_json(const HypersurfacePresentation& h) {
  json tail = json::array();
  for (const auto& t : h.tail) {
    json r = rational_to_json(t.coeff);
    tail.push_back({{"exps", t.exps}, {"num", r["num"]}, {"den", r["den"]}});
  }
  return {{"d", h.d}, {"n", h.n}, {"tail", tail}};
}

HypersurfacePresentation hypersurface_from_json(const json& j) {
  HypersurfacePresentation h;
  h.d = get<int>(j, "d");
  h.n = get<int>(j, "n");
  if (j.contains("tail"))
    for (const auto& t : j.at("tail")) h.tail.push_back({get<std::vector<int>>(t, "exps"), rational_from_json(t)});
  try {
    h.validate();
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }
  return h;
}

json validation_to_json(const Quiver& q, const ValidationReport& v, const TerminationReport* t) {
  json viol = json::array();
  for (const auto& x : v.violations) {
    json e{{"kind", to_string(x.kind)}, {"pair", x.pair}, {"message", x.message}};
    if (x.other) e["other"] = *x.other;
    viol.push_back(e);
  }
  json out{{"valid", v.ok()}, {"violations", viol}};
  if (t) {
    json f = json::array();
    for (const auto& [pair, path, cmp] : t->failures)
      f.push_back({{"pair", pair}, {"path", path_to_json(q, path)}, {"comparison", to_string(cmp)}});
    out["termination"] = {{"certified", t->ok}, {"failures", f}};
  } else {
    out["termination"] = nullptr;
  }
  return out;
}

json confluence_to_json(const Quiver& q, const ConfluenceReport& r) {
  json ov = json::array();
  for (const auto& o : r.overlaps)
    ov.push_back({{"path", path_to_json(q, o.path)},
                  {"u", path_to_json(q, o.triple.u)},
                  {"v", path_to_json(q, o.triple.v)},
                  {"w", path_to_json(q, o.triple.w)},
                  {"left_step", o.left_step.to_string(q)},
                  {"right_step", o.right_step.to_string(q)},
                  {"left_nf", o.left_nf.to_string(q)},
                  {"right_nf", o.right_nf.to_string(q)},
                  {"status", to_string(o.status)}});
  return {{"confluent", r.confluent()},
          {"resolved", r.count(OverlapStatus::resolved)},
          {"failed", r.count(OverlapStatus::failed)},
          {"capped", r.count(OverlapStatus::cap)},
          {"overlaps", ov}};
}

json trace_to_json(const Quiver& q, const ReductionSystem& r, const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"term", path_to_json(q, s.term)},
                     {"start", s.start},
                     {"pair", s.pair},
                     {"lhs", path_to_json(q, r.pair(s.pair).lhs)}});
  return {{"count", t.count}, {"terminated", t.terminated}, {"steps", steps}};
}

json ambiguities_to_json(const Quiver& q, const std::vector<Ambiguity>& a) {
  json out = json::array();
  for (const auto& x : a) {
    json f = json::array();
    for (const auto& p : x.factors) f.push_back(path_to_json(q, p));
    out.push_back({{"path", path_to_json(q, x.path)}, {"factors", f}});
  }
  return out;
}

json mc_to_json(const Quiver& q, const MCReport& r) {
  json rec = json::array();
  for (const auto& x : r.records)
    rec.push_back({{"path", path_to_json(q, x.path)},
                   {"u", path_to_json(q, x.triple.u)},
                   {"v", path_to_json(q, x.triple.v)},
                   {"w", path_to_json(q, x.triple.w)},
                   {"left", x.left.to_string(q)},
                   {"right", x.right.to_string(q)},
                   {"residual", x.residual.to_string(q)},
                   {"pass", x.pass}});
  return {{"pass", r.pass}, {"truncation", r.truncation.describe()}, {"verdict", r.label()}, {"records", rec}};
}

json equations_to_json(const std::vector<ParamPoly>& eqs) {
  json out = json::array();
  for (const auto& e : eqs) out.push_back(e.to_string());
  return out;
}

json degree_to_json(const Quiver& q, const DegreeReport& r) {
  json f = json::array();
  for (const auto& [s, p] : r.failures) f.push_back({{"s", path_to_json(q, s)}, {"path", path_to_json(q, p)}});
  return {{"ok", r.ok}, {"failures", f}};
}

json hh2_to_json(const Quiver& q, const HH2Verdict& v) {
  json res = json::array();
  for (const auto& [where, e] : v.n_residuals) res.push_back({{"at", where}, {"residual", e.to_string(q)}});
  return {{"pass", v.pass()},
          {"kind", to_string(v.kind)},
          {"homogeneous", v.cocycle.homogeneous},
          {"cocycle", mc_to_json(q, v.cocycle.mc)},
          {"n_condition", v.n_condition()},
          {"n_residuals", res}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace qd::io
