#include "qd/element.hpp"

#include <algorithm>
#include <sstream>

namespace qd {

AlgebraElement AlgebraElement::of(const Path& p, RingPtr ring) {
  AlgebraElement e(ring);
  e.add_term(p, ParamPoly::constant(ring, 1));
  return e;
}

AlgebraElement AlgebraElement::of(const Path& p, const ParamPoly& coeff) {
  AlgebraElement e(coeff.ring());
  e.add_term(p, coeff);
  return e;
}

ParamPoly AlgebraElement::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? ParamPoly(ring_) : it->second;
}

void AlgebraElement::adopt_ring(const RingPtr& r) {
  if (r == ring_) return;
  const RingPtr& target = common_ring(ring_, r);
  if (target == ring_) return;
  ring_ = target;
  Terms lifted;
  for (auto& [p, c] : terms_) {
    ParamPoly nc = c.rebased(ring_);
    if (!nc.is_zero()) lifted.emplace(p, std::move(nc));
  }
  terms_ = std::move(lifted);
}

void AlgebraElement::add_term(const Path& p, const ParamPoly& c) {
  if (c.is_zero()) return;
  adopt_ring(c.ring());
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    ParamPoly v = c.ring() == ring_ ? c : c.rebased(ring_);
    if (!v.is_zero()) terms_.emplace(p, std::move(v));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::add_term(const Path& p, const Rational& c) {
  add_term(p, ParamPoly::constant(ring_, c));
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  adopt_ring(other.ring_);
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  adopt_ring(other.ring_);
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(*this);
  for (auto& [p, c] : out.terms_) c = -c;
  return out;
}

AlgebraElement AlgebraElement::scaled(const ParamPoly& c) const {
  AlgebraElement out(common_ring(ring_, c.ring()));
  for (const auto& [p, v] : terms_) out.add_term(p, v * c);
  return out;
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
  AlgebraElement out(ring_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& [p, v] : out.terms_) v = v.scaled(c);
  return out;
}

AlgebraElement AlgebraElement::rebased(const RingPtr& target) const {
  AlgebraElement out(target);
  for (const auto& [p, c] : terms_) {
    ParamPoly v = c.rebased(target);
    if (!v.is_zero()) out.terms_.emplace(p, std::move(v));
  }
  return out;
}

AlgebraElement AlgebraElement::truncated(int max_degree) const {
  AlgebraElement out(ring_);
  for (const auto& [p, c] : terms_) {
    ParamPoly v = c.truncated(max_degree);
    if (!v.is_zero()) out.terms_.emplace(p, std::move(v));
  }
  return out;
}

AlgebraElement AlgebraElement::homogeneous_part(int degree) const {
  AlgebraElement out(ring_);
  for (const auto& [p, c] : terms_) {
    ParamPoly v = c.homogeneous_part(degree);
    if (!v.is_zero()) out.terms_.emplace(p, std::move(v));
  }
  return out;
}

AlgebraElement AlgebraElement::component(int source, int target) const {
  AlgebraElement out(ring_);
  for (const auto& [p, c] : terms_)
    if (p.source() == source && p.target() == target) out.terms_.emplace(p, c);
  return out;
}

int AlgebraElement::max_param_degree() const {
  int d = -1;
  for (const auto& [p, c] : terms_) d = std::max(d, c.max_degree());
  return d;
}

int AlgebraElement::min_param_degree() const {
  int d = -1;
  for (const auto& [p, c] : terms_) {
    int m = c.min_degree();
    if (d < 0 || m < d) d = m;
  }
  return d;
}

std::string AlgebraElement::to_string(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.is_constant()) {
      Rational v = c.constant_term();
      if (v == 1) {
        os << p.to_string(q);
      } else if (v == -1) {
        os << "-" << p.to_string(q);
      } else {
        os << v.get_str() << "*" << p.to_string(q);
      }
    } else {
      os << "(" << c.to_string() << ")*" << p.to_string(q);
    }
  }
  return os.str();
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [p, c] : a.terms_) {
    if (!(it->first == p) || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

AlgebraElement free_mul(const Quiver& q, const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out(common_ring(a.ring(), b.ring()));
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      auto p = compose(q, pa, pb);
      if (!p) continue;
      out.add_term(*p, ca * cb);
    }
  }
  return out;
}

}  // namespace qd
