#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qd {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Base of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Elements over incompatible parameter declarations were combined.
class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

/// A computation ran into a configured step or size cap.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Either exact arithmetic, or arithmetic modulo m^{order+1} where m is the
/// ideal generated by all declared parameters.
struct Truncation {
  bool exact = true;
  int order = 0;

  static Truncation none() { return {}; }
  static Truncation at(int n) { return {false, n}; }

  bool keeps(int degree) const { return exact || degree <= order; }
  std::string describe() const;

  friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// The declared parameters t_1..t_m of one computation, plus its truncation.
class ParamRing {
 public:
  ParamRing(std::vector<std::string> names, Truncation trunc);

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return names_.size(); }
  const Truncation& truncation() const noexcept { return trunc_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const ParamRing&, const ParamRing&) = default;

 private:
  std::vector<std::string> names_;
  Truncation trunc_;
};

using RingPtr = std::shared_ptr<const ParamRing>;

RingPtr make_ring(std::vector<std::string> names, Truncation trunc = {});
/// The ring without parameters; compatible with every other ring.
const RingPtr& scalar_ring();
/// Same parameters, different truncation.
RingPtr with_truncation(const RingPtr& ring, Truncation trunc);
/// Resolves the ring two operands should be combined in, or throws.
const RingPtr& common_ring(const RingPtr& a, const RingPtr& b);

using Exponents = std::vector<std::uint16_t>;

int total_degree(const Exponents& e);

/// Graded order: total degree first, then lexicographic with the first
/// declared parameter largest.
struct GradedLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial in the ring's parameters with exact rational coefficients.
/// Never stores zero coefficients or monomials beyond the truncation order.
class ParamPoly {
 public:
  using Terms = std::map<Exponents, Rational, GradedLess>;

  ParamPoly() : ParamPoly(scalar_ring()) {}
  explicit ParamPoly(RingPtr ring);

  static ParamPoly constant(RingPtr ring, const Rational& c);
  static ParamPoly variable(RingPtr ring, std::size_t index);
  static ParamPoly variable(RingPtr ring, std::string_view name);
  static ParamPoly monomial(RingPtr ring, Exponents exps, const Rational& c);

  const RingPtr& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// -1 for the zero polynomial.
  int min_degree() const;
  int max_degree() const;

  void add_term(const Exponents& exps, const Rational& c);

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  ParamPoly operator-() const;
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);

  ParamPoly scaled(const Rational& c) const;
  /// Re-expresses the polynomial over `target` by parameter name and applies
  /// the target truncation. Throws if a used parameter is missing.
  ParamPoly rebased(const RingPtr& target) const;
  ParamPoly truncated(int max_degree) const;
  ParamPoly homogeneous_part(int degree) const;
  ParamPoly substitute(std::size_t index, const Rational& value) const;

  /// Divides by the rational content and makes the lexicographically leading
  /// coefficient positive.
  ParamPoly normalized() const;

  std::string to_string() const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

 private:
  RingPtr ring_;
  Terms terms_;
};

/// Pure lexicographic comparison with the first parameter largest.
bool lex_less(const Exponents& a, const Exponents& b);

}  // namespace qd
