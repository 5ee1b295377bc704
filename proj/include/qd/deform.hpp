#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qd/ambiguity.hpp"
#include "qd/order.hpp"
#include "qd/rewrite.hpp"

namespace qd {

/// The deformation datum: a value for each reducible lhs s, parallel to s,
/// irreducible, with coefficients in the parameter ideal. Unlisted s map to 0.
struct DeformationMap {
  RingPtr ring = scalar_ring();
  std::map<Path, AlgebraElement> entries;
  /// False when the input did not state a truncation; the MC check then picks
  /// one itself.
  bool truncation_stated = true;

  AlgebraElement value(const Path& s) const;
  int max_param_degree() const;
  DeformationMap with_truncation(Truncation t) const;
  /// Linear combination sum c_i * maps_i over a common ring.
  static DeformationMap combination(const std::vector<std::pair<ParamPoly, DeformationMap>>& parts,
                                    const RingPtr& ring);

  friend bool operator==(const DeformationMap& a, const DeformationMap& b);
};

/// Problems with the datum itself: unknown lhs, non-parallel or reducible
/// values, coefficients with nonzero constant term.
std::vector<std::string> check_deformation_map(const ReductionSystem& r, const DeformationMap& phi);

/// Evaluates the deformed product by repeated rightmost rewriting with
/// phi + phi~.
class StarProduct {
 public:
  StarProduct(const ReductionSystem& r, const DeformationMap& phi, Limits limits = {});

  AlgebraElement operator()(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement operator()(const Path& a, const Path& b);
  /// Rewrites an arbitrary element with phi + phi~.
  AlgebraElement rewrite(const AlgebraElement& a);
  /// Normal form for the undeformed system.
  AlgebraElement project(const AlgebraElement& a) const;

  const RingPtr& ring() const noexcept { return ring_; }
  const RewriteStats& stats() const noexcept { return stats_; }
  /// True when termination of every call is guaranteed without a step cap.
  bool certified() const noexcept { return certified_; }

 private:
  const ReductionSystem* r_;
  RingPtr ring_;
  std::vector<AlgebraElement> rhs_;
  Limits limits_;
  bool certified_ = false;
  RewriteStats stats_;
};

struct MCRecord {
  Path path;
  Triple triple;
  AlgebraElement left;   // pi(u) * (pi(v) * pi(w))
  AlgebraElement right;  // (pi(u) * pi(v)) * pi(w)
  AlgebraElement residual;
  bool pass = true;
};

struct MCReport {
  std::vector<MCRecord> records;
  Truncation truncation;
  bool pass = true;
  std::string label() const;
  std::string to_text(const Quiver& q) const;
};

struct MCOptions {
  std::optional<Truncation> truncation;
  Limits limits;
};

/// Truncation the MC check uses when none is forced: the stated one; exact
/// when the system is certified and phi~ meets the degree condition;
/// otherwise twice the largest parameter degree in phi~.
Truncation effective_truncation(const ReductionSystem& r, const DeformationMap& phi);

MCReport mc_check(const ReductionSystem& r, const DeformationMap& phi, const MCOptions& opts = {});

/// Nonzero residual coefficients, each divided by its content with positive
/// leading coefficient, deduplicated and sorted.
std::vector<ParamPoly> mc_residual_equations(const ReductionSystem& r, const DeformationMap& phi,
                                             const MCOptions& opts = {});
std::vector<ParamPoly> residual_equations(const MCReport& report);

struct CocycleReport {
  bool homogeneous = true;
  MCReport mc;
  bool pass() const { return homogeneous && mc.pass; }
};

/// MC check modulo the square of the parameter ideal.
CocycleReport cocycle_check(const ReductionSystem& r, const DeformationMap& phi, const Limits& limits = {});

struct DegreeReport {
  bool ok = true;
  std::vector<std::pair<Path, Path>> failures;  // (s, offending path)
};

/// Every path of phi~(s) is below s, for s in `restrict_to` (all of S when
/// unset).
DegreeReport degree_condition(const DeformationMap& phi, const AdmissibleOrder& o,
                              const std::optional<std::set<Path>>& restrict_to = std::nullopt);

/// a * b for elements supported on loops at vertex v.
AlgebraElement corner_product(StarProduct& star, int v, const AlgebraElement& a, const AlgebraElement& b);

}  // namespace qd
