#include "qd/fixtures.hpp"

#include <gmpxx.h>

#include "qd/parse.hpp"

namespace qd {

const DeformationMap& Fixture::family(const std::string& n) const {
  for (const auto& [k, v] : families)
    if (k == n) return v;
  std::string known;
  for (const auto& [k, v] : families) known += (known.empty() ? "" : ", ") + k;
  throw Error("fixture '" + name + "' has no family '" + n + "' (known: " + known + ")");
}

namespace {

std::string num(int i) { return std::to_string(i); }

// Builds a map from (lhs text, value text) pairs.
DeformationMap phi_of(const ReductionSystem& r, const RingPtr& ring,
                      const std::vector<std::pair<std::string, std::string>>& entries, bool stated) {
  const Quiver& q = r.quiver();
  DeformationMap phi;
  phi.ring = ring;
  phi.truncation_stated = stated;
  for (const auto& [s, v] : entries) {
    Path lhs = Path::parse(q, s);
    if (!r.find_pair(lhs)) throw Error("'" + s + "' is not a reduction lhs");
    AlgebraElement val = parse_element(q, ring, v, lhs.source());
    if (val.is_zero()) continue;
    auto [it, inserted] = phi.entries.try_emplace(lhs, AlgebraElement(ring));
    it->second += val;
    if (it->second.is_zero()) phi.entries.erase(it);
  }
  return phi;
}

int suffix_number(const std::string& name, const std::string& prefix) {
  std::string rest = name.substr(prefix.size());
  if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
    throw Error("fixture '" + name + "' needs a number after '" + prefix + "'");
  return std::stoi(rest);
}

// Sum over i = 1..n of base (inner)^i, as element text.
std::string geometric(const std::string& base, const std::string& inner, const std::string& tail, int n) {
  std::string s;
  for (int i = 1; i <= n; ++i) s += " + " + base + " (" + inner + ")^" + num(i) + " " + tail;
  return s;
}

}  // namespace

ReductionSystem zk_tilt_system(int k) {
  if (k < 2) throw Error("zk-tilt needs k >= 2");
  auto q = std::make_shared<Quiver>();
  q->add_vertex("0");
  q->add_vertex("1");
  q->add_arrow("x0", 0, 1);
  q->add_arrow("x1", 0, 1);
  for (int j = 0; j < k; ++j) q->add_arrow("y" + num(j), 1, 0);
  std::vector<ReductionPair> pairs;
  for (int j = 1; j <= k - 1; ++j)
    pairs.push_back({Path::parse(*q, "x1 y" + num(j - 1)), parse_element(*q, scalar_ring(), "x0 y" + num(j))});
  for (int j = 1; j <= k - 1; ++j)
    pairs.push_back({Path::parse(*q, "y" + num(j) + " x0"), parse_element(*q, scalar_ring(), "y" + num(j - 1) + " x1")});
  AdmissibleOrder::Weights deg(q->arrows().size(), 0);
  deg[q->arrow_id("x1")] = 1;
  for (int j = 0; j < k; ++j) deg[q->arrow_id("y" + num(j))] = j;
  std::vector<int> prec{q->arrow_id("x0"), q->arrow_id("y0"), q->arrow_id("x1")};
  for (int j = 1; j < k; ++j) prec.push_back(q->arrow_id("y" + num(j)));
  AdmissibleOrder o(*q, true, {deg}, prec);
  return ReductionSystem(q, std::move(pairs)).with_certificate(o);
}

DeformationMap zk_alpha(const ReductionSystem& r, int k, int i) {
  if (i < 1 || i > k - 1) throw Error("alpha index out of range");
  return phi_of(r, make_ring({"t"}),
                {{"x1 y" + num(i - 1), "e_0 t"}, {"y" + num(i) + " x0", "-e_1 t"}}, false);
}

DeformationMap zk_beta(const ReductionSystem& r, int k, int l) {
  std::vector<std::pair<std::string, std::string>> e;
  for (int j = 1; j <= k - 1; ++j) {
    int idx = j - 1 + l;
    std::string v = idx < k ? "x0 y" + num(idx) : idx == k ? "x1 y" + num(k - 1) : "";
    if (v.empty()) throw Error("beta index out of range");
    e.emplace_back("x1 y" + num(j - 1), v + " t");
  }
  return phi_of(r, make_ring({"t"}), e, false);
}

DeformationMap zk_beta_symp(const ReductionSystem& r) {
  return phi_of(r, make_ring({"t"}), {{"x1 y0", "e_0 t"}}, false);
}

DeformationMap zk_alpha_family(const ReductionSystem& r, int k) {
  std::vector<std::string> names;
  for (int j = 1; j < k; ++j) names.push_back("t" + num(j));
  std::vector<std::pair<std::string, std::string>> e;
  for (int j = 1; j < k; ++j) {
    e.emplace_back("x1 y" + num(j - 1), "e_0 t" + num(j));
    e.emplace_back("y" + num(j) + " x0", "-e_1 t" + num(j));
  }
  return phi_of(r, make_ring(names), e, false);
}

DeformationMap zk_beta012(const ReductionSystem& r, int k) {
  std::vector<std::pair<std::string, std::string>> e;
  for (int j = 1; j <= k - 1; ++j) {
    std::string v;
    for (int l = 0; l <= 2; ++l) {
      int idx = j - 1 + l;
      v += (idx < k ? " + x0 y" + num(idx) : " + x1 y" + num(k - 1)) + " t" + num(l);
    }
    e.emplace_back("x1 y" + num(j - 1), v);
  }
  return phi_of(r, make_ring({"t0", "t1", "t2"}), e, false);
}

DeformationMap zk_corrected(const ReductionSystem& r, int k) {
  auto ring = make_ring({"t0", "t1", "t2"}, Truncation::at(2 * k));
  std::vector<std::pair<std::string, std::string>> e;
  for (int j = 1; j <= k - 1; ++j) {
    std::string v = "-x0 y" + num(j) + " + x0 y" + num(j - 1) + " t0";
    for (int i = j; i <= k - 2; ++i) v += " + x0 y" + num(i) + " t2^" + num(i - j) + " (1 + t1 + t0 t2)";
    v += " + x0 y" + num(k - 1) + " t2^" + num(k - j - 1) + " (1 + t1)";
    v += " + x1 y" + num(k - 1) + " t2^" + num(k - j);
    e.emplace_back("x1 y" + num(j - 1), v);
  }
  return phi_of(r, ring, e, true);
}

DeformationMap zk_variety_family(const ReductionSystem& r, int k) {
  std::vector<std::string> names{"mu0", "mu1"};
  for (int j = 1; j < k; ++j) names.push_back("lambda" + num(j));
  std::vector<std::pair<std::string, std::string>> e;
  for (int j = 1; j <= k - 1; ++j) {
    e.emplace_back("x1 y" + num(j - 1), "x0 y" + num(j - 1) + " mu0 + x0 y" + num(j) + " mu1 + e_0 lambda" + num(j));
    e.emplace_back("y" + num(j) + " x0", "-e_1 lambda" + num(j));
  }
  return phi_of(r, make_ring(names), e, false);
}

DeformationMap zk_q_corner(const ReductionSystem& r, int k) {
  std::vector<std::pair<std::string, std::string>> e;
  for (int j = 1; j <= k - 1; ++j) e.emplace_back("x1 y" + num(j - 1), "x0 y" + num(j) + " mu2");
  return phi_of(r, make_ring({"mu2"}), e, false);
}

DeformationMap zk_diagram_commutative(const BuiltDiagram& d, int k) {
  std::vector<std::string> names;
  std::string v;
  for (int j = 1; j < k; ++j) {
    names.push_back("t" + num(j));
    v += " + f y^" + num(j) + " t" + num(j);
  }
  return phi_of(d.system, make_ring(names), {{"u f", v.empty() ? "0" : v}}, false);
}

DeformationMap zk_diagram_noncommutative(const BuiltDiagram& d, int n) {
  auto ring = make_ring({"t1'", "t2'"}, Truncation::at(n));
  return phi_of(d.system, ring,
                {{"u z", "(t1' + z t2') u"},
                 {"v ζ", geometric("ζ", "-ζ t1' - t2'", "v", n)},
                 {"w x", "(t1' + x t2') w"},
                 {"w y", geometric("y", "-y t1' - t2'", "w", n)}},
                true);
}

DeformationMap zk_diagram_q(const BuiltDiagram& d, int n) {
  auto ring = make_ring({"h"}, Truncation::at(n));
  return phi_of(d.system, ring,
                {{"u z", "z u h"}, {"v ζ", geometric("ζ", "-h", "v", n)}, {"w x", "x w h"}, {"w y", geometric("y", "-h", "w", n)}},
                true);
}

DeformationMap zk_diagram_combined(const BuiltDiagram& d, int k, int n) {
  std::vector<std::string> names{"t0'", "t1'"};
  std::string uf;
  for (int j = 1; j < k; ++j) {
    names.push_back("t" + num(j));
    uf += " + f y^" + num(j) + " t" + num(j);
  }
  auto ring = make_ring(names, Truncation::at(n));
  std::vector<std::pair<std::string, std::string>> e{{"u z", "(t0' + z t1') u"},
                                                     {"v ζ", geometric("ζ", "-ζ t0' - t1'", "v", n)},
                                                     {"w x", "(t0' + x t1') w"},
                                                     {"w y", geometric("y", "-y t0' - t1'", "w", n)}};
  if (!uf.empty()) e.emplace_back("u f", uf);
  return phi_of(d.system, ring, e, true);
}

DeformationMap genus3_family(const BuiltDiagram& d, bool literal) {
  std::vector<std::string> names;
  for (int i = 1; i <= 6; ++i) names.push_back("lambda" + num(i));
  std::string w4 = literal ? "x^3 w" : "x^2 w";
  std::string u4 = literal ? "z^3 u" : "z^2 u";
  return phi_of(d.system, make_ring(names),
                {{"v^4", "lambda1 + ζ lambda2 + v lambda3 + ζ v lambda4 + v^2 lambda5 + ζ v^2 lambda6"},
                 {"w^4", "x^4 lambda1 + x^3 lambda2 + x^3 w lambda3 + " + w4 + " lambda4 + x^2 w^2 lambda5 + x w^2 lambda6"},
                 {"u^4", "z^4 lambda1 + z^3 lambda2 + z^3 u lambda3 + " + u4 + " lambda4 + z^2 u^2 lambda5 + z u^2 lambda6"}},
                false);
}

HypersurfacePresentation singular_hypersurface(int n) {
  return {3, n, {{{1, 1, 0}, Rational(-1)}}};
}

AdmissibleOrder singular_hypersurface_order(const Quiver& q, int n) {
  return AdmissibleOrder(q, false, {{n, n, 2}}, {0, 1, 2});
}

DeformationMap singular_hypersurface_phi(const ReductionSystem& r, int n) {
  std::string v21;
  for (int i = 1; i <= n; ++i) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, i);
    v21 += " + " + c.get_str() + " x3^" + num(n - i) + " t^" + num(i);
  }
  return phi_of(r, make_ring({"t"}), {{"x2 x1", v21}, {"x3 x1", "x1 t"}, {"x3 x2", "-x2 t"}}, false);
}

Fixture fixture(const std::string& name) {
  Fixture fx;
  fx.name = name;
  auto tilt = [&](int k) {
    fx.system = zk_tilt_system(k);
    const auto& r = fx.system;
    fx.families.emplace_back("alpha-family", zk_alpha_family(r, k));
    for (int i = 1; i < k; ++i) fx.families.emplace_back("alpha" + num(i), zk_alpha(r, k, i));
    for (int l = 0; l <= 2; ++l) fx.families.emplace_back("beta" + num(l), zk_beta(r, k, l));
    if (k == 2) fx.families.emplace_back("beta-symp", zk_beta_symp(r));
    fx.families.emplace_back("beta012", zk_beta012(r, k));
    fx.families.emplace_back("corrected", zk_corrected(r, k));
    fx.families.emplace_back("variety", zk_variety_family(r, k));
    fx.families.emplace_back("q-corner", zk_q_corner(r, k));
  };
  if (name.rfind("zk-tilt-", 0) == 0) {
    tilt(suffix_number(name, "zk-tilt-"));
  } else if (name == "preprojective-A1") {
    fx.system = zk_tilt_system(2);
    const auto& r = fx.system;
    auto ring = make_ring({"t1", "t2"});
    fx.families.emplace_back("deformed", phi_of(r, ring, {{"x1 y0", "e_0 t1 + e_0 t2"}, {"y1 x0", "-e_1 t1"}}, false));
    fx.families.emplace_back("alpha1", zk_alpha(r, 2, 1));
    fx.families.emplace_back("beta-symp", zk_beta_symp(r));
    fx.families.emplace_back("beta1", zk_beta(r, 2, 1));
  } else if (name.rfind("zk-diagram-", 0) == 0) {
    int k = suffix_number(name, "zk-diagram-");
    if (k < 1) throw Error("zk-diagram needs k >= 1");
    fx.cover = zk_diagram(k);
    fx.diagram = build(*fx.cover);
    fx.system = fx.diagram->system;
    fx.families.emplace_back("commutative", zk_diagram_commutative(*fx.diagram, k));
    fx.families.emplace_back("noncommutative", zk_diagram_noncommutative(*fx.diagram));
    fx.families.emplace_back("q", zk_diagram_q(*fx.diagram));
    fx.families.emplace_back("combined", zk_diagram_combined(*fx.diagram, k));
  } else if (name == "genus3") {
    fx.cover = genus3_curve();
    fx.diagram = build(*fx.cover);
    fx.system = fx.diagram->system;
    fx.families.emplace_back("lambda-family", genus3_family(*fx.diagram));
    fx.families.emplace_back("lambda-literal", genus3_family(*fx.diagram, true));
  } else if (name.rfind("hypersurface-", 0) == 0) {
    int n = suffix_number(name, "hypersurface-");
    fx.hypersurface = singular_hypersurface(n);
    HypersurfaceSystem hs = build_system(*fx.hypersurface);
    fx.system = hs.system.with_certificate(singular_hypersurface_order(*hs.quiver, n));
    DeformationMap phi = singular_hypersurface_phi(fx.system, n);
    fx.families.emplace_back("example", phi);
    DeformationMap lin = phi;
    for (auto& [s, v] : lin.entries) v = v.homogeneous_part(1);
    fx.families.emplace_back("candidate", lin);
  } else {
    throw Error("unknown fixture '" + name + "'");
  }
  return fx;
}

std::vector<std::string> fixture_patterns() {
  return {"zk-tilt-K", "zk-diagram-K", "genus3", "hypersurface-N", "preprojective-A1"};
}

}  // namespace qd
