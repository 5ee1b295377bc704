#pragma once

#include <map>
#include <string>

#include "qd/param_poly.hpp"
#include "qd/quiver.hpp"

namespace qd {

/// Finite linear combination of paths with parameter-polynomial
/// coefficients. All coefficients live over one ring; zero terms are never
/// stored.
class AlgebraElement {
 public:
  using Terms = std::map<Path, ParamPoly>;

  AlgebraElement() : ring_(scalar_ring()) {}
  explicit AlgebraElement(RingPtr ring) : ring_(std::move(ring)) {}
  static AlgebraElement of(const Path& p, RingPtr ring = scalar_ring());
  static AlgebraElement of(const Path& p, const ParamPoly& coeff);

  const RingPtr& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  ParamPoly coefficient(const Path& p) const;

  void add_term(const Path& p, const ParamPoly& c);
  void add_term(const Path& p, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement operator-() const;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

  AlgebraElement scaled(const ParamPoly& c) const;
  AlgebraElement scaled(const Rational& c) const;
  AlgebraElement rebased(const RingPtr& target) const;
  AlgebraElement truncated(int max_degree) const;
  /// Terms whose coefficients are replaced by their degree-d parts.
  AlgebraElement homogeneous_part(int degree) const;
  /// Terms whose paths run from `source` to `target`.
  AlgebraElement component(int source, int target) const;

  /// Largest total parameter degree among coefficients, -1 if zero.
  int max_param_degree() const;
  int min_param_degree() const;

  std::string to_string(const Quiver& q) const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  void adopt_ring(const RingPtr& r);

  RingPtr ring_;
  Terms terms_;
};

/// Concatenation product in the path algebra; non-composable pairs vanish.
AlgebraElement free_mul(const Quiver& q, const AlgebraElement& a, const AlgebraElement& b);

}  // namespace qd
