#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qd/deform.hpp"
#include "qd/rewrite.hpp"

namespace qd {

/// One tail monomial lambda * x1^e1 ... xd^ed.
struct TailTerm {
  std::vector<int> exps;
  Rational coeff;

  friend bool operator==(const TailTerm& a, const TailTerm& b) { return a.exps == b.exps && a.coeff == b.coeff; }
};

/// f = xd^n + tail, in k[x1..xd].
struct HypersurfacePresentation {
  int d = 0;
  int n = 0;
  std::vector<TailTerm> tail;

  /// Throws unless d >= 1, n >= 2 and every tail exponent vector has length
  /// d, total degree <= n, differs from the pure xd^n and appears once.
  void validate() const;
  bool operator==(const HypersurfacePresentation&) const = default;
};

struct HypersurfaceSystem {
  QuiverPtr quiver;
  ReductionSystem system;  // certified by `order`
  AdmissibleOrder order;   // length first, then lex with x1 < ... < xd
};

/// R = {(xd^n, -tail)} + {(xj xi, xi xj) : i < j}.
HypersurfaceSystem build_system(const HypersurfacePresentation& h);

/// Basis element xd^(nj) x_ik ... x_i1 with i1 < ... < ik.
struct BachElement {
  int j = 0;
  std::vector<int> indices;  // ascending, 1-based

  int degree() const { return 2 * j + static_cast<int>(indices.size()); }
  Path path(const Quiver& q, const HypersurfacePresentation& h) const;
  std::string label(const HypersurfacePresentation& h) const;
  std::strong_ordering operator<=>(const BachElement&) const = default;
  bool operator==(const BachElement&) const = default;
};

/// Reads a path back as a basis element; nullopt if it is not of that form.
std::optional<BachElement> bach_element(const Path& p, const HypersurfacePresentation& h);

/// The closed-form set S_{m+2}, sorted by path.
std::vector<BachElement> bach_basis(const HypersurfacePresentation& h, const Quiver& q, int m);
/// sum over 2j + k = m + 2 of C(d, k).
std::size_t bach_count(int d, int m);

/// df/dxi as an irreducible element of A.
AlgebraElement partial(const HypersurfaceSystem& s, const HypersurfacePresentation& h, int i);

/// A-valued cochain: a coefficient per basis element of one degree.
using BachCochain = std::map<BachElement, AlgebraElement>;

BachCochain differential(const HypersurfaceSystem& s, const HypersurfacePresentation& h,
                         const AlgebraElement& a, const BachElement& e);
BachCochain differential(const HypersurfaceSystem& s, const HypersurfacePresentation& h, const BachCochain& c);

enum class HH2Kind { zero, jacobian, commutator, mixed };
std::string to_string(HH2Kind k);

struct HH2Verdict {
  CocycleReport cocycle;
  /// Residuals sum_i (a_ki - a_ik) df/dxi, per parameter and k; empty when
  /// the commutator entries satisfy the condition.
  std::vector<std::pair<std::string, AlgebraElement>> n_residuals;
  HH2Kind kind = HH2Kind::zero;

  bool n_condition() const { return n_residuals.empty(); }
  bool pass() const { return cocycle.pass() && n_condition(); }
};

/// Checks a first-order candidate both through the cocycle check and through
/// the commutator condition, and sorts it by which entries are nonzero.
HH2Verdict verify_hh2_candidate(const HypersurfaceSystem& s, const HypersurfacePresentation& h,
                                const DeformationMap& candidate, const Limits& limits = {});

}  // namespace qd
