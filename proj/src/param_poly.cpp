#include "qd/param_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qd {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string Truncation::describe() const {
  if (exact) return "exact";
  return "modulo m^" + std::to_string(order + 1);
}

ParamRing::ParamRing(std::vector<std::string> names, Truncation trunc)
    : names_(std::move(names)), trunc_(trunc) {
  if (!trunc_.exact && trunc_.order < 0) throw Error("truncation order must be nonnegative");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error("duplicate parameter name '" + names_[i] + "'");
}

std::optional<std::size_t> ParamRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names, Truncation trunc) {
  return std::make_shared<const ParamRing>(std::move(names), trunc);
}

const RingPtr& scalar_ring() {
  static const RingPtr ring = make_ring({});
  return ring;
}

RingPtr with_truncation(const RingPtr& ring, Truncation trunc) {
  if (ring->truncation() == trunc) return ring;
  return make_ring(ring->names(), trunc);
}

const RingPtr& common_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return a;
  if (b->size() == 0) return a;
  if (a->size() == 0) return b;
  if (*a == *b) return a;
  throw ParameterMismatch("parameter declarations differ");
}

int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool lex_less(const Exponents& a, const Exponents& b) {
  // Larger exponent on an earlier parameter makes a monomial larger.
  return a < b;
}

bool GradedLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return lex_less(a, b);
}

namespace {

Exponents pad(const Exponents& e, std::size_t n) {
  Exponents out(e);
  out.resize(n, 0);
  return out;
}

ParamPoly lift(const ParamPoly& p, const RingPtr& target) {
  if (p.ring() == target) return p;
  return p.rebased(target);
}

}  // namespace

ParamPoly::ParamPoly(RingPtr ring) : ring_(std::move(ring)) {}

ParamPoly ParamPoly::constant(RingPtr ring, const Rational& c) {
  ParamPoly p(std::move(ring));
  p.add_term(Exponents(p.ring_->size(), 0), c);
  return p;
}

ParamPoly ParamPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw Error("parameter index out of range");
  Exponents e(ring->size(), 0);
  e[index] = 1;
  return monomial(std::move(ring), std::move(e), 1);
}

ParamPoly ParamPoly::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw ParameterMismatch("undeclared parameter '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

ParamPoly ParamPoly::monomial(RingPtr ring, Exponents exps, const Rational& c) {
  ParamPoly p(std::move(ring));
  if (exps.size() != p.ring_->size()) throw Error("exponent vector has wrong length");
  p.add_term(exps, c);
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational ParamPoly::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& [e, c] = *terms_.begin();
  return total_degree(e) == 0 ? c : Rational(0);
}

int ParamPoly::min_degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

int ParamPoly::max_degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

void ParamPoly::add_term(const Exponents& exps, const Rational& c) {
  if (c == 0 || !ring_->truncation().keeps(total_degree(exps))) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  const RingPtr& r = common_ring(ring_, other.ring_);
  if (r != ring_) *this = lift(*this, r);
  if (other.ring_ == r) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
  } else {
    for (const auto& [e, c] : other.terms_) add_term(pad(e, r->size()), c);
  }
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  return *this += -other;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  const RingPtr& r = common_ring(a.ring_, b.ring_);
  ParamPoly out(r);
  const auto& trunc = r->truncation();
  const std::size_t n = r->size();
  for (const auto& [ea, ca] : a.terms_) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (!trunc.keeps(da + total_degree(eb))) break;  // b's terms ascend in degree
      Exponents e(n, 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) {
  return *this = *this * other;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  if (c == 0) return ParamPoly(ring_);
  ParamPoly out(*this);
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

ParamPoly ParamPoly::rebased(const RingPtr& target) const {
  ParamPoly out(target);
  std::vector<std::size_t> map(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto idx = target->index_of(ring_->names()[i]);
    if (idx) {
      map[i] = *idx;
      continue;
    }
    bool used = std::any_of(terms_.begin(), terms_.end(),
                            [i](const auto& t) { return t.first[i] != 0; });
    if (used) throw ParameterMismatch("parameter '" + ring_->names()[i] + "' is not declared in target");
    map[i] = target->size();
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (map[i] < target->size()) ne[map[i]] = e[i];
    out.add_term(ne, c);
  }
  return out;
}

ParamPoly ParamPoly::truncated(int max_degree) const {
  ParamPoly out(ring_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= max_degree) out.terms_.emplace(e, c);
  return out;
}

ParamPoly ParamPoly::homogeneous_part(int degree) const {
  ParamPoly out(ring_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == degree) out.terms_.emplace(e, c);
  return out;
}

ParamPoly ParamPoly::substitute(std::size_t index, const Rational& value) const {
  ParamPoly out(ring_);
  for (const auto& [e, c] : terms_) {
    Exponents ne(e);
    Rational f = c;
    for (int k = 0; k < e[index]; ++k) f *= value;
    ne[index] = 0;
    out.add_term(ne, f);
  }
  return out;
}

ParamPoly ParamPoly::normalized() const {
  if (terms_.empty()) return *this;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    num_gcd = gcd(num_gcd, mpz_class(c.get_num()));
    den_lcm = lcm(den_lcm, mpz_class(c.get_den()));
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  const Exponents* lead = nullptr;
  for (const auto& [e, c] : terms_)
    if (!lead || lex_less(*lead, e)) lead = &e;
  if (terms_.at(*lead) < 0) content = -content;
  return scaled(1 / content);
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first, reads like usual notation.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = total_degree(e) == 0;
    if (mag != 1 || unit) {
      os << mag.get_str();
      if (!unit) os << "*";
    }
    bool firstvar = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!firstvar) os << "*";
      firstvar = false;
      os << ring_->names()[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.ring_ == b.ring_ || a.ring_->names() == b.ring_->names()) return a.terms_ == b.terms_;
  if (a.is_zero() && b.is_zero()) return true;
  const RingPtr& r = common_ring(a.ring_, b.ring_);
  return lift(a, r).terms_ == lift(b, r).terms_;
}

}  // namespace qd
