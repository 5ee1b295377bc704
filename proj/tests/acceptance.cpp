// One PASS/FAIL line per acceptance criterion, with timing and the first
// reasons for any failure.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "qd/fixtures.hpp"
#include "qd/parse.hpp"
#include "random_util.hpp"

using namespace qd;

namespace {

struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string num(int i) { return std::to_string(i); }

bool run(int id, const std::string& title, double budget, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > budget) {
    std::ostringstream os;
    os << "took " << s << " s, budget " << budget << " s";
    c.failures.push_back(os.str());
  }
  bool pass = c.failures.empty();
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  (" << std::fixed << std::setprecision(2)
            << s << " s) " << title << "\n";
  for (std::size_t i = 0; i < c.failures.size() && i < 8; ++i) std::cout << "    reason: " << c.failures[i] << "\n";
  if (c.failures.size() > 8) std::cout << "    ... " << c.failures.size() - 8 << " more\n";
  for (const auto& n : c.notes) std::cout << "    note: " << n << "\n";
  return pass;
}

std::set<std::string> paths_of(const std::vector<Ambiguity>& a, const Quiver& q) {
  std::set<std::string> out;
  for (const auto& x : a) out.insert(x.path.to_string(q));
  return out;
}

std::vector<std::tuple<Path, std::size_t, std::size_t>> overlap_list(const ReductionSystem& r) {
  std::vector<std::tuple<Path, std::size_t, std::size_t>> out;
  for (const auto& a : enumerate(r, 1))
    for (const auto& t : a.triples) out.emplace_back(a.path, t.u.length(), t.v.length());
  return out;
}

std::vector<Path> parallel_irreducible(const ReductionSystem& r, const Path& s, std::size_t max_len) {
  const Quiver& q = r.quiver();
  std::vector<Path> out, layer;
  if (s.source() == s.target()) out.push_back(Path::trivial(s.source()));
  for (const auto& a : q.arrows())
    if (a.source == s.source()) layer.push_back(Path::arrow(q, a.id));
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const Path& p : layer) {
      if (!r.is_irreducible(p)) continue;
      if (p.target() == s.target()) out.push_back(p);
      for (const auto& a : q.arrows())
        if (a.source == p.target()) next.push_back(*compose(q, p, Path::arrow(q, a.id)));
    }
    layer = std::move(next);
  }
  return out;
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ", ") + x;
  return "{" + out + "}";
}

std::set<std::string> equation_set(const std::vector<ParamPoly>& eqs) {
  std::set<std::string> out;
  for (const auto& e : eqs) out.insert(e.to_string());
  return out;
}

ParamPoly power(const ParamPoly& p, int e) {
  ParamPoly r = ParamPoly::constant(p.ring(), 1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

AlgebraElement at_one(const AlgebraElement& a, std::size_t param) {
  AlgebraElement out;
  for (const auto& [p, c] : a.terms()) out.add_term(p, c.substitute(param, 1).constant_term());
  return out;
}

const std::vector<std::string> bundled{"zk-tilt-2",      "zk-tilt-3",      "zk-tilt-4",      "zk-tilt-5",
                                       "zk-tilt-6",      "zk-diagram-2",   "zk-diagram-3",   "zk-diagram-4",
                                       "genus3",         "hypersurface-2", "hypersurface-3", "hypersurface-4",
                                       "preprojective-A1"};

void tilting_structure(Check& c) {
  for (int k = 2; k <= 6; ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Fixture fx = fixture("zk-tilt-" + num(k));
    const auto& r = fx.system;
    const Quiver& q = r.quiver();
    std::string K = "k=" + num(k) + ": ";
    c.expect(validate(r).ok(), K + "validate reports violations");
    c.expect(r.certificate() && check_termination(r, *r.certificate()).ok, K + "no termination certificate");
    c.expect(check_diamond(r).confluent(), K + "diamond fails");
    std::set<std::string> want;
    for (int j = 1; j < k - 1; ++j) want.insert("x1 y" + num(j) + " x0");
    auto got = paths_of(enumerate(r, 1), q);
    c.expect(got == want, K + "S3 = " + join(got) + ", expected " + join(want));
    c.expect(enumerate(r, 2).empty(), K + "S4 is not empty");
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(s < 1.0, K + "took over 1 s");
  }
}

void cocycle_suite(Check& c) {
  for (int k = 3; k <= 5; ++k) {
    Fixture fx = fixture("zk-tilt-" + num(k));
    for (int i = 1; i < k; ++i)
      c.expect(cocycle_check(fx.system, fx.family("alpha" + num(i))).pass(), "k=" + num(k) + " alpha" + num(i));
    for (int l = 0; l <= 2; ++l)
      c.expect(cocycle_check(fx.system, fx.family("beta" + num(l))).pass(), "k=" + num(k) + " beta" + num(l));
  }
  Fixture two = fixture("zk-tilt-2");
  c.expect(cocycle_check(two.system, two.family("beta-symp")).pass(), "k=2 beta-symp");

  // Random perturbations that the linear oracle rejects must fail too.
  rnd::Rng g(2024);
  int found = 0, tries = 0;
  while (found < 20 && tries < 500) {
    ++tries;
    int k = rnd::uniform(g, 3, 5);
    Fixture fx = fixture("zk-tilt-" + num(k));
    const auto& r = fx.system;
    std::vector<std::string> base{"alpha1", "beta0", "beta1", "beta2"};
    DeformationMap phi = fx.family(base[rnd::uniform(g, 0, 3)]);
    const Path& s = r.pair(rnd::uniform(g, 0, static_cast<int>(r.size()) - 1)).lhs;
    auto cands = parallel_irreducible(r, s, 3);
    const Path& p = cands[rnd::uniform(g, 0, static_cast<int>(cands.size()) - 1)];
    phi.entries[s] = phi.value(s) + AlgebraElement::of(p, ParamPoly::variable(phi.ring, 0).scaled(rnd::small_rational(g)));
    if (phi.entries[s].is_zero()) phi.entries.erase(s);
    if (oracle::FirstOrder(r, phi).cocycle(overlap_list(r))) continue;
    ++found;
    c.expect(!cocycle_check(r, phi).pass(), "perturbation " + num(found) + " (k=" + num(k) + ") passed");
  }
  c.expect(found == 20, "only " + num(found) + " non-cocycle perturbations generated");
}

void mc_suite(Check& c) {
  for (int k = 2; k <= 6; ++k) {
    Fixture fx = fixture("zk-tilt-" + num(k));
    auto rep = mc_check(fx.system, fx.family("alpha-family"));
    c.expect(rep.pass && rep.truncation == Truncation::none(), "k=" + num(k) + " alpha-family: " + rep.label());
  }
  for (int k = 4; k <= 5; ++k) {
    Fixture fx = fixture("zk-tilt-" + num(k));
    c.expect(!mc_check(fx.system, fx.family("beta012")).pass, "k=" + num(k) + " beta012 passed");
  }
  for (int k = 3; k <= 5; ++k) {
    Fixture fx = fixture("zk-tilt-" + num(k));
    MCOptions o;
    o.truncation = Truncation::at(2 * k);
    auto rep = mc_check(fx.system, fx.family("corrected"), o);
    c.expect(rep.pass, "k=" + num(k) + " corrected fails at N=" + num(2 * k));
  }
  Fixture two = fixture("zk-tilt-2");
  rnd::Rng g(7);
  auto ring = make_ring({"t1", "t2", "t3"});
  for (int i = 0; i < 20; ++i) {
    DeformationMap phi;
    phi.ring = ring;
    for (const auto& pr : two.system.pairs()) {
      AlgebraElement v(ring);
      for (const Path& p : parallel_irreducible(two.system, pr.lhs, 4))
        if (rnd::uniform(g, 0, 1) == 0) {
          ParamPoly coeff = ParamPoly::variable(ring, rnd::uniform(g, 0, 2)).scaled(rnd::small_rational(g));
          if (rnd::uniform(g, 0, 1)) coeff *= ParamPoly::variable(ring, rnd::uniform(g, 0, 2));
          v.add_term(p, coeff);
        }
      if (!v.is_zero()) phi.entries[pr.lhs] = v;
    }
    c.expect(mc_check(two.system, phi).pass, "k=2 random datum " + num(i) + " failed");
  }
}

void variety_suite(Check& c) {
  for (int k = 4; k <= 5; ++k) {
    Fixture fx = fixture("zk-tilt-" + num(k));
    const auto& phi = fx.family("variety");
    std::set<std::string> want;
    for (int j = 1; j <= k - 2; ++j)
      want.insert(parse_poly(phi.ring, "mu0*lambda" + num(j) + " + mu1*lambda" + num(j + 1)).to_string());
    auto got = equation_set(mc_residual_equations(fx.system, phi));
    c.expect(got == want, "tilting k=" + num(k) + ": got " + join(got) + ", expected " + join(want));
  }
  for (int k = 3; k <= 4; ++k) {
    Fixture fx = fixture("zk-diagram-" + num(k));
    const auto& phi = fx.family("combined");
    std::set<std::string> want;
    for (int j = 1; j <= k - 2; ++j)
      want.insert(parse_poly(phi.ring, "t0'*t" + num(j) + " + t1'*t" + num(j + 1)).normalized().to_string());
    auto got = equation_set(mc_residual_equations(fx.system, phi));
    std::set<std::string> extra;
    for (const auto& e : got)
      if (!want.count(e)) extra.insert(e);
    c.expect(got == want, "diagram k=" + num(k) + ": got " + join(got) + ", expected " + join(want));
    if (!extra.empty())
      c.notes.push_back("diagram k=" + num(k) + ": the overlap u z f also forces " + join(extra) +
                        " (coefficients of f and f y^" + num(k - 1) + ")");
  }
}

void diagram_builder(Check& c) {
  for (int k = 2; k <= 5; ++k) {
    BuiltDiagram d = build(zk_diagram(k));
    std::string K = "Z_" + num(k) + ": ";
    c.expect(d.quiver->vertices().size() == 3, K + "vertex count");
    c.expect(d.quiver->arrows().size() == 9, K + "arrow count");
    c.expect(d.system.size() == 10, K + "pair count " + num(static_cast<int>(d.system.size())));
    auto got = paths_of(enumerate(d.system, 1), *d.quiver);
    std::set<std::string> want{"u z f", "v ζ g", "w x y", "w y x", "x y x", "y x y"};
    c.expect(got == want, K + "S3 = " + join(got));
  }
  Fixture fx = fixture("genus3");
  const Quiver& q = fx.system.quiver();
  c.expect(fx.system.size() == 13, "genus 3: " + num(static_cast<int>(fx.system.size())) + " pairs");
  auto rep = check_diamond(fx.system);
  std::set<std::string> listed{"u z f", "u^4 f", "v ζ g", "v^4 g", "x y x", "y x y",
                               "w x y", "w y x", "w^4 x", "w^4 y", "u^4 z", "v^4 ζ"};
  std::set<std::string> resolved, all;
  for (const auto& o : rep.overlaps) {
    all.insert(o.path.to_string(q));
    if (o.status == OverlapStatus::resolved) resolved.insert(o.path.to_string(q));
  }
  for (const auto& s : listed) c.expect(resolved.count(s) == 1, "genus 3 overlap " + s + " not resolved");
  c.expect(rep.confluent(), "genus 3 diamond fails");
  std::set<std::string> beyond;
  for (const auto& s : all)
    if (!listed.count(s)) beyond.insert(s);
  if (!beyond.empty()) c.notes.push_back("genus 3 also has overlaps " + join(beyond) + ", all resolved");
  const auto& phi = fx.family("lambda-family");
  auto mc = mc_check(fx.system, phi);
  c.expect(mc.pass && mc.truncation == Truncation::none(), "genus 3 lambda family: " + mc.label());
  c.expect(degree_condition(phi, *fx.system.certificate(), fx.diagram->lhs_with_origin(Origin::R0)).ok,
           "genus 3 lambda family fails the degree condition on S0");
}

void diagram_deformations(Check& c) {
  for (int k = 2; k <= 5; ++k) {
    Fixture fx = fixture("zk-diagram-" + num(k));
    const auto& phi = fx.family("commutative");
    auto mc = mc_check(fx.system, phi);
    c.expect(mc.pass, "k=" + num(k) + " commutative: " + mc.label());
    c.expect(degree_condition(phi, *fx.system.certificate(), fx.diagram->lhs_with_origin(Origin::R0)).ok,
             "k=" + num(k) + " commutative fails degcond on S0");
  }
  Fixture fx = fixture("zk-diagram-3");
  const Quiver& q = fx.system.quiver();
  const auto& nc = fx.family("noncommutative");
  MCOptions six;
  six.truncation = Truncation::at(6);
  c.expect(mc_check(fx.system, nc, six).pass, "noncommutative family fails at N=6");
  {
    StarProduct star(fx.system, nc.with_truncation(Truncation::at(6)));
    auto e = [&](const std::string& s) { return parse_element(q, star.ring(), s); };
    auto lhs = star(e("u"), star(e("z"), e("f")));
    auto rhs = star(star(e("u"), e("z")), e("f"));
    auto want = e("f x w + f (t1' + x t2') w");
    c.expect(lhs == want, "u*(z*f) = " + lhs.to_string(q));
    c.expect(rhs == want, "(u*z)*f = " + rhs.to_string(q));
  }
  {
    StarProduct star(fx.system, fx.family("q").with_truncation(Truncation::at(6)));
    auto e = [&](const std::string& s) { return parse_element(q, star.ring(), s); };
    auto m = [&](const std::string& a, const std::string& b) { return star(e(a), e(b)); };
    ParamPoly qq = ParamPoly::constant(star.ring(), 1) + ParamPoly::variable(star.ring(), "h");
    c.expect(m("u", "z") == m("z", "u").scaled(qq), "u*z != q z*u");
    c.expect(m("v", "ζ").scaled(qq) == m("ζ", "v"), "q v*ζ != ζ*v");
    c.expect(m("w", "x") == m("x", "w").scaled(qq), "w*x != q x*w");
    c.expect(m("w", "y").scaled(qq) == m("y", "w"), "q w*y != y*w");
    c.expect(m("x", "y") == e("e_UV") && m("y", "x") == e("e_UV"), "x*y or y*x is not 1");
  }
}

void hypersurface_suite(Check& c) {
  for (int n = 2; n <= 4; ++n) {
    Fixture fx = fixture("hypersurface-" + num(n));
    const auto& r = fx.system;
    const Quiver& q = r.quiver();
    std::string N = "n=" + num(n) + ": ";
    c.expect(check_diamond(r).confluent(), N + "not confluent");
    auto got = paths_of(enumerate(r, 1), q);
    std::set<std::string> want{"x3^" + num(n) + " x1", "x3^" + num(n) + " x2", "x3^" + num(n + 1), "x3 x2 x1"};
    c.expect(got == want, N + "S3 = " + join(got));
    const auto& phi = fx.family("example");
    auto mc = mc_check(r, phi);
    c.expect(mc.pass && mc.truncation == Truncation::none(), N + "example: " + mc.label());
    StarProduct star(r, phi);
    auto e = [&](const std::string& s) { return parse_element(q, phi.ring, s); };
    auto value = star(e("x3^" + num(n - 1)), star(e("x3"), e("x1")));
    AlgebraElement want_v = e("x1^2 x2");
    mpz_class binom;
    for (int i = 1; i <= n; ++i) {
      mpz_bin_uiui(binom.get_mpz_t(), n, i);
      Path p = Path::parse(q, n - i > 0 ? "x1 x3^" + num(n - i) : "x1");
      want_v += AlgebraElement::of(p, power(ParamPoly::variable(phi.ring, 0), i).scaled(Rational(binom)));
    }
    c.expect(value == want_v, N + "x3^(n-1)*(x3*x1) = " + value.to_string(q));
    c.expect(star(star(e("x3^" + num(n - 1)), e("x3")), e("x1")) == want_v, N + "(x3^(n-1)*x3)*x1 differs");
    if (n == 2) {
      AlgebraElement X = -e("x1"), Y = e("x2"), H = e("2*x3 + 1");
      auto bracket = [&](const AlgebraElement& a, const AlgebraElement& b) { return at_one(star(a, b) - star(b, a), 0); };
      c.expect(bracket(H, X) == at_one(X.scaled(Rational(2)), 0), "[H,X] != 2X at t=1");
      c.expect(bracket(H, Y) == at_one(Y.scaled(Rational(-2)), 0), "[H,Y] != -2Y at t=1");
      c.expect(bracket(X, Y) == at_one(H, 0), "[X,Y] != H at t=1");
    }
  }
  rnd::Rng g(99);
  int checked = 0;
  for (int d = 1; d <= 3; ++d)
    for (int n = 2; n <= 3; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        HypersurfacePresentation h{d, n, {}};
        std::set<std::vector<int>> seen;
        for (int i = 0; i < 4; ++i) {
          std::vector<int> ex(d, 0);
          int deg = rnd::uniform(g, 0, n);
          for (int j = 0; j < deg; ++j) ++ex[rnd::uniform(g, 0, d - 1)];
          if (ex[d - 1] == n || !seen.insert(ex).second) continue;
          h.tail.push_back({ex, rnd::small_rational(g)});
        }
        auto s = build_system(h);
        for (int m = 0; m <= 3; ++m)
          for (const auto& el : bach_basis(h, *s.quiver, m)) {
            AlgebraElement a = reduce(rnd::element(*s.quiver, g, 3, 2), s.system);
            auto dd = differential(s, h, differential(s, h, a, el));
            bool zero = true;
            for (const auto& [k, v] : dd) zero = zero && v.is_zero();
            c.expect(zero, "d^2 != 0 at d=" + num(d) + " n=" + num(n) + " m=" + num(m));
            ++checked;
          }
      }
  c.notes.push_back("d^2 = 0 checked on " + num(checked) + " basis elements");
}

void corner_suite(Check& c) {
  for (int k = 3; k <= 4; ++k) {
    Fixture fx = fixture("zk-tilt-" + num(k));
    const Quiver& q = fx.system.quiver();
    const auto& phi = fx.family("q-corner");
    StarProduct star(fx.system, phi);
    auto z = [&](int i) {
      return parse_element(q, phi.ring, i == 0 ? "x1 y" + num(k - 1) : "x0 y" + num(k - i));
    };
    ParamPoly qq = ParamPoly::constant(phi.ring, 1) + ParamPoly::variable(phi.ring, "mu2");
    std::string K = "k=" + num(k) + ": ";
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        c.expect(corner_product(star, 0, z(i), z(j)) == corner_product(star, 0, z(j), z(i)).scaled(power(qq, j - i)),
                 K + "z" + num(i) + "*z" + num(j) + " != q^" + num(j - i) + " z" + num(j) + "*z" + num(i));
    for (int j = 1; j < k; ++j)
      c.expect(corner_product(star, 0, z(j), z(1)) == corner_product(star, 0, z(j + 1), z(0)),
               K + "z" + num(j) + "*z1 != z" + num(j + 1) + "*z0");
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        c.expect(reduce(free_mul(q, z(i), z(j + 1)), fx.system) == reduce(free_mul(q, z(i + 1), z(j)), fx.system),
                 K + "cone relation z" + num(i) + " z" + num(j + 1) + " = z" + num(i + 1) + " z" + num(j));
  }
}

void property_suite(Check& c) {
  rnd::Rng g(4242);
  // strategy independence
  for (const auto& name : bundled) {
    Fixture fx = fixture(name);
    const Quiver& q = fx.system.quiver();
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      AlgebraElement a = AlgebraElement::of(rnd::walk(q, g, rnd::uniform(g, 1, 8)));
      auto right = reduce(a, fx.system, Strategy::rightmost);
      Limits l;
      l.seed = static_cast<std::uint64_t>(i);
      if (!(right == reduce(a, fx.system, Strategy::leftmost)) || !(right == reduce(a, fx.system, Strategy::random, l)))
        ++bad;
    }
    c.expect(bad == 0, name + ": " + num(bad) + " paths depend on the strategy");
  }
  // enumerator against the brute-force oracle
  int disagree = 0;
  for (int i = 0; i < 50; ++i) {
    ReductionSystem r = rnd::system(g, rnd::uniform(g, 1, 2), rnd::uniform(g, 2, 3), rnd::uniform(g, 1, 4), 4);
    std::set<std::tuple<Path, std::size_t, std::size_t>> mine;
    for (const auto& a : enumerate(r, 1))
      for (const auto& t : a.triples) mine.emplace(a.path, t.u.length(), t.v.length());
    if (mine != oracle::overlaps(r, 7)) ++disagree;
  }
  c.expect(disagree == 0, num(disagree) + " random systems disagree with the overlap oracle");
  // associativity after every MC pass
  int families = 0;
  for (const auto& name : bundled) {
    Fixture fx = fixture(name);
    const Quiver& q = fx.system.quiver();
    for (const auto& [fam, phi] : fx.families) {
      auto rep = mc_check(fx.system, phi);
      if (!rep.pass) continue;
      ++families;
      StarProduct star(fx.system, phi.with_truncation(rep.truncation));
      int bad = 0;
      for (int i = 0; i < 200; ++i) {
        Path p = rnd::walk(q, g, rnd::uniform(g, 0, 6));
        std::size_t n = p.length();
        std::size_t i1 = n ? rnd::uniform(g, 0, static_cast<int>(n)) : 0;
        std::size_t i2 = n ? rnd::uniform(g, static_cast<int>(i1), static_cast<int>(n)) : 0;
        auto piece = [&](std::size_t a, std::size_t b) {
          if (a == b) return AlgebraElement::of(Path::trivial(a == 0 ? p.source() : q.arrow(p[a - 1]).target));
          return AlgebraElement::of(p.subpath(q, a, b - a));
        };
        auto u = star.project(piece(0, i1)), v = star.project(piece(i1, i2)), w = star.project(piece(i2, n));
        if (!(star(star(u, v), w) == star(u, star(v, w)))) ++bad;
      }
      c.expect(bad == 0, name + "/" + fam + ": " + num(bad) + " non-associative triples");
    }
  }
  c.notes.push_back("associativity checked on " + num(families) + " MC families");
  // truncation coherence
  Fixture tilt = fixture("zk-tilt-4");
  for (std::string fam : {"beta012", "corrected", "variety"}) {
    const auto& phi = tilt.family(fam);
    MCOptions hi, lo;
    hi.truncation = Truncation::at(6);
    lo.truncation = Truncation::at(3);
    auto a = mc_check(tilt.system, phi, hi), b = mc_check(tilt.system, phi, lo);
    bool same = a.records.size() == b.records.size();
    for (std::size_t i = 0; same && i < a.records.size(); ++i)
      same = a.records[i].residual.rebased(b.records[i].residual.ring()) == b.records[i].residual;
    c.expect(same, fam + ": residuals at N=6 do not truncate to those at N=3");
  }
  {
    Fixture fx = fixture("zk-diagram-3");
    const Quiver& q = fx.system.quiver();
    const auto& nc = fx.family("noncommutative");
    StarProduct hi(fx.system, nc.with_truncation(Truncation::at(6))), lo(fx.system, nc.with_truncation(Truncation::at(2)));
    for (int i = 0; i < 50; ++i) {
      Path p = rnd::walk(q, g, 4);
      if (p.length() < 2) continue;
      std::size_t cut = rnd::uniform(g, 1, static_cast<int>(p.length()) - 1);
      auto a = AlgebraElement::of(p.subpath(q, 0, cut)), b = AlgebraElement::of(p.subpath(q, cut, p.length() - cut));
      auto ah = hi.project(a), bh = hi.project(b);
      c.expect(hi(ah, bh).rebased(lo.ring()) == lo(ah.rebased(lo.ring()), bh.rebased(lo.ring())),
               "star product at N=6 does not truncate to N=2 on " + p.to_string(q));
    }
    // an exact result read modulo m^N agrees with the computation at N
    Fixture h = fixture("hypersurface-3");
    const auto& ex = h.family("example");
    StarProduct exact(h.system, ex), cut(h.system, ex.with_truncation(Truncation::at(1)));
    auto e = [&](const std::string& s) { return parse_element(h.system.quiver(), ex.ring, s); };
    c.expect(exact(e("x2"), e("x1")).rebased(cut.ring()) == cut(e("x2"), e("x1")),
             "exact star product disagrees with its truncation");
  }
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "Z_k tilting structure", 5.0, tilting_structure);
  ok &= run(2, "cocycle suite", 5.0, cocycle_suite);
  ok &= run(3, "MC positives and negatives", 30.0, mc_suite);
  ok &= run(4, "variety equations", 30.0, variety_suite);
  ok &= run(5, "diagram builder", 10.0, diagram_builder);
  ok &= run(6, "Z_k diagram deformations", 30.0, diagram_deformations);
  ok &= run(7, "hypersurface suite", 60.0, hypersurface_suite);
  ok &= run(8, "corner relations", 10.0, corner_suite);
  ok &= run(9, "property suites", 120.0, property_suite);
  return ok ? 0 : 1;
}
