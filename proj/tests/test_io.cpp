#include <doctest.h>

#include "qd/fixtures.hpp"
#include "qd/io.hpp"
#include "qd/parse.hpp"

using namespace qd;
using io::json;

namespace {

const std::vector<std::string> names{"zk-tilt-2", "zk-tilt-4", "zk-diagram-3", "genus3", "hypersurface-3",
                                     "preprojective-A1"};

}  // namespace

TEST_CASE("rationals") {
  Rational big("123456789012345678901234567891/7");
  big.canonicalize();
  CHECK(io::rational_from_json(io::rational_to_json(big)) == big);
  CHECK(io::rational_to_json(Rational(-3, 4)) == json{{"num", -3}, {"den", 4}});
  CHECK(io::rational_from_json(json{{"num", 2}, {"den", 4}}) == Rational(1, 2));
  CHECK_THROWS_AS(io::rational_from_json(json{{"num", 1}, {"den", 0}}), io::SchemaError);
}

TEST_CASE("systems round-trip") {
  for (const auto& name : names) {
    CAPTURE(name);
    Fixture fx = fixture(name);
    json j = io::system_to_json(fx.system);
    ReductionSystem back = io::system_from_json(j);
    CHECK(back == fx.system);
    CHECK(back.certificate() == fx.system.certificate());
    CHECK(io::system_to_json(back) == j);
    // through text
    CHECK(io::system_from_json(json::parse(j.dump())) == fx.system);
  }
}

TEST_CASE("deformation maps round-trip") {
  for (const auto& name : names) {
    Fixture fx = fixture(name);
    for (const auto& [fam, phi] : fx.families) {
      CAPTURE(name);
      CAPTURE(fam);
      json j = io::phi_to_json(fx.system.quiver(), phi);
      DeformationMap back = io::phi_from_json(fx.system.quiver(), json::parse(j.dump()));
      CHECK(back == phi);
      CHECK(back.truncation_stated == phi.truncation_stated);
      CHECK(back.ring->truncation() == phi.ring->truncation());
    }
  }
}

TEST_CASE("covers, provenance and hypersurfaces round-trip") {
  for (int k = 2; k <= 4; ++k) {
    CoverSpec c = zk_diagram(k);
    CHECK(io::cover_from_json(json::parse(io::cover_to_json(c).dump())) == c);
  }
  CoverSpec g = genus3_curve();
  CHECK(io::cover_from_json(io::cover_to_json(g)) == g);
  CoverSpec cube = hypercube_skeleton(3);
  CHECK(io::cover_from_json(io::cover_to_json(cube)) == cube);
  auto h = singular_hypersurface(3);
  h.tail.push_back({{1, 0, 1}, Rational(-2, 3)});
  CHECK(io::hypersurface_from_json(io::hypersurface_to_json(h)) == h);
  BuiltDiagram d = build(zk_diagram(3));
  json prov = io::provenance_to_json(d);
  CHECK(prov.at("pairs").size() == d.system.size());
  CHECK(prov.at("pairs")[0].at("origin") == "R0");
}

TEST_CASE("element, path and polynomial codecs") {
  Fixture fx = fixture("zk-tilt-3");
  const Quiver& q = fx.system.quiver();
  auto ring = make_ring({"t0", "t1"});
  AlgebraElement a = parse_element(q, ring, "(1/2*t0 - t1^2)*x0 y1 + 3*e_0");
  CHECK(io::element_from_json(q, ring, io::element_to_json(q, a)) == a);
  CHECK(io::element_from_json(q, ring, json("x0 y1")) == AlgebraElement::of(Path::parse(q, "x0 y1"), ring));
  CHECK(io::path_from_json(q, io::path_to_json(q, Path::trivial(1))) == Path::trivial(1));
  CHECK(io::path_from_json(q, json("x1 y0")) == Path::parse(q, "x1 y0"));
  ParamPoly p = parse_poly(ring, "t0^3 - 2/5*t0*t1");
  CHECK(io::poly_from_json(ring, io::poly_to_json(p)) == p);
  CHECK(io::poly_from_json(ring, json(2)) == ParamPoly::constant(ring, 2));
  auto o = *fx.system.certificate();
  CHECK(io::order_from_json(q, io::order_to_json(q, o)) == o);
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(io::system_from_json(json::parse(R"({"pairs":[]})")), io::SchemaError);
  CHECK_THROWS(io::quiver_from_json(json::parse(R"({"vertices":[{"label":"a"}],"arrows":[{"label":"x","source":"a","target":"b"}]})")));
  json sys = io::system_to_json(fixture("zk-tilt-3").system);
  sys["pairs"][0]["lhs"] = json::array({"x0", "x0"});
  CHECK_THROWS(io::system_from_json(sys));
  json phi = json::parse(R"({"params":["t"],"entries":[{"s":["nope"],"value":"t"}]})");
  CHECK_THROWS(io::phi_from_json(fixture("zk-tilt-3").system.quiver(), phi));
  json t = json::parse(R"({"params":["t"],"entries":[],"truncation":{"mode":"sideways"}})");
  CHECK_THROWS_AS(io::phi_from_json(fixture("zk-tilt-3").system.quiver(), t), io::SchemaError);
}

TEST_CASE("an order that fails to certify is kept out of the certificate") {
  Fixture fx = fixture("zk-tilt-3");
  json j = io::system_to_json(fx.system);
  auto prec = j["order"]["precedence"];
  std::reverse(prec.begin(), prec.end());
  j["order"]["precedence"] = prec;
  ReductionSystem r = io::system_from_json(j);
  CHECK(!r.certificate());
  CHECK(io::stated_order(r, j));
}

TEST_CASE("reports are deterministic") {
  Fixture fx = fixture("zk-tilt-4");
  const Quiver& q = fx.system.quiver();
  auto a = io::mc_to_json(q, mc_check(fx.system, fx.family("beta012"))).dump();
  auto b = io::mc_to_json(q, mc_check(fx.system, fx.family("beta012"))).dump();
  CHECK(a == b);
  auto c = io::confluence_to_json(q, check_diamond(fx.system)).dump();
  CHECK(c == io::confluence_to_json(q, check_diamond(fx.system)).dump());
  auto eq = io::equations_to_json(mc_residual_equations(fx.system, fx.family("variety")));
  CHECK(eq.size() == 2);
}
