#include "qd/hypersurface.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qd {

void HypersurfacePresentation::validate() const {
  if (d < 1) throw Error("hypersurface needs d >= 1");
  if (n < 2) throw Error("hypersurface needs leading exponent n >= 2");
  std::set<std::vector<int>> seen;
  for (const auto& t : tail) {
    if (static_cast<int>(t.exps.size()) != d) throw Error("tail exponent vector must have length d");
    int deg = 0;
    for (int e : t.exps) {
      if (e < 0) throw Error("negative tail exponent");
      deg += e;
    }
    if (deg > n) throw Error("tail monomial of degree above n");
    if (t.exps[d - 1] == n) throw Error("tail may not contain the leading monomial; f must be monic in xd^n");
    if (!seen.insert(t.exps).second) throw Error("repeated tail monomial");
  }
}

namespace {

Path monomial_path(const Quiver& q, const std::vector<int>& exps) {
  std::vector<int> arrows;
  for (std::size_t i = 0; i < exps.size(); ++i) arrows.insert(arrows.end(), exps[i], static_cast<int>(i));
  return arrows.empty() ? Path::trivial(0) : Path::of(q, arrows);
}

// Coefficient of the degree-one monomial in parameter p, over the scalar ring.
AlgebraElement linear_part(const AlgebraElement& a, std::size_t p) {
  AlgebraElement out;
  Exponents unit(a.ring()->size(), 0);
  unit[p] = 1;
  for (const auto& [path, c] : a.terms()) {
    auto it = c.terms().find(unit);
    if (it != c.terms().end()) out.add_term(path, it->second);
  }
  return out;
}

}  // namespace

HypersurfaceSystem build_system(const HypersurfacePresentation& h) {
  h.validate();
  auto q = std::make_shared<Quiver>();
  q->add_vertex("*");
  for (int i = 1; i <= h.d; ++i) q->add_arrow("x" + std::to_string(i), 0, 0);
  std::vector<ReductionPair> pairs;
  AlgebraElement rhs;
  for (const auto& t : h.tail)
    if (t.coeff != 0) rhs.add_term(monomial_path(*q, t.exps), Rational(-t.coeff));
  pairs.push_back({Path::of(*q, std::vector<int>(h.n, h.d - 1)), rhs});
  for (int j = 1; j < h.d; ++j)
    for (int i = 0; i < j; ++i) pairs.push_back({Path::of(*q, {j, i}), AlgebraElement::of(Path::of(*q, {i, j}))});
  HypersurfaceSystem s;
  s.quiver = q;
  s.order = AdmissibleOrder::length_lex(*q);
  s.system = ReductionSystem(q, std::move(pairs)).with_certificate(s.order);
  return s;
}

Path BachElement::path(const Quiver& q, const HypersurfacePresentation& h) const {
  std::vector<int> arrows(static_cast<std::size_t>(h.n) * j, h.d - 1);
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) arrows.push_back(*it - 1);
  return arrows.empty() ? Path::trivial(0) : Path::of(q, arrows);
}

std::string BachElement::label(const HypersurfacePresentation& h) const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << ' ';
    first = false;
  };
  if (j > 0) {
    sep();
    os << 'x' << h.d;
    if (h.n * j > 1) os << '^' << h.n * j;
  }
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
    sep();
    os << 'x' << *it;
  }
  return first ? "1" : os.str();
}

std::optional<BachElement> bach_element(const Path& p, const HypersurfacePresentation& h) {
  const auto& a = p.arrows();
  std::size_t lead = 0;
  while (lead < a.size() && a[lead] == h.d - 1) ++lead;
  BachElement e;
  std::size_t rem = lead % h.n;
  if (rem > 1) return std::nullopt;
  e.j = static_cast<int>(lead / h.n);
  for (std::size_t i = lead; i < a.size(); ++i) {
    if (i > lead && a[i] >= a[i - 1]) return std::nullopt;
    e.indices.insert(e.indices.begin(), a[i] + 1);
  }
  if (rem == 1) e.indices.push_back(h.d);
  return e;
}

std::vector<BachElement> bach_basis(const HypersurfacePresentation& h, const Quiver& q, int m) {
  std::vector<std::pair<Path, BachElement>> out;
  const int total = m + 2;
  for (int j = 0; 2 * j <= total; ++j) {
    int k = total - 2 * j;
    if (k > h.d) continue;
    // k-subsets of 1..d
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
      BachElement e{j, idx};
      out.emplace_back(e.path(q, h), e);
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == h.d - (k - 1 - pos)) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<BachElement> res;
  for (auto& [p, e] : out) res.push_back(std::move(e));
  return res;
}

std::size_t bach_count(int d, int m) {
  auto choose = [](int a, int b) -> std::size_t {
    if (b < 0 || b > a) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  std::size_t total = 0;
  for (int j = 0; 2 * j <= m + 2; ++j) total += choose(d, m + 2 - 2 * j);
  return total;
}

AlgebraElement partial(const HypersurfaceSystem& s, const HypersurfacePresentation& h, int i) {
  const Quiver& q = *s.quiver;
  AlgebraElement out;
  std::vector<int> lead(h.d, 0);
  lead[h.d - 1] = h.n;
  std::vector<std::pair<std::vector<int>, Rational>> f{{lead, Rational(1)}};
  for (const auto& t : h.tail) f.emplace_back(t.exps, t.coeff);
  for (auto [exps, c] : f) {
    int e = exps[i - 1];
    if (e == 0 || c == 0) continue;
    exps[i - 1] = e - 1;
    out.add_term(monomial_path(q, exps), Rational(c * e));
  }
  return reduce(out, s.system);
}

BachCochain differential(const HypersurfaceSystem& s, const HypersurfacePresentation& h, const AlgebraElement& a,
                         const BachElement& e) {
  BachCochain out;
  const std::size_t k = e.indices.size();
  for (std::size_t l = 0; l < k; ++l) {
    BachElement target{e.j + 1, {}};
    for (std::size_t i = 0; i < k; ++i)
      if (i != l) target.indices.push_back(e.indices[i]);
    AlgebraElement term = reduce(free_mul(*s.quiver, a, partial(s, h, e.indices[l])), s.system);
    if (l % 2 == 1) term = -term;
    auto& slot = out.try_emplace(target, AlgebraElement(term.ring())).first->second;
    slot += term;
    if (slot.is_zero()) out.erase(target);
  }
  return out;
}

BachCochain differential(const HypersurfaceSystem& s, const HypersurfacePresentation& h, const BachCochain& c) {
  BachCochain out;
  for (const auto& [e, a] : c)
    for (auto& [t, v] : differential(s, h, a, e)) {
      auto& slot = out.try_emplace(t, AlgebraElement(v.ring())).first->second;
      slot += v;
      if (slot.is_zero()) out.erase(t);
    }
  return out;
}

std::string to_string(HH2Kind k) {
  switch (k) {
    case HH2Kind::zero: return "zero";
    case HH2Kind::jacobian: return "jacobian";
    case HH2Kind::commutator: return "commutator";
    case HH2Kind::mixed: return "mixed";
  }
  return "?";
}

HH2Verdict verify_hh2_candidate(const HypersurfaceSystem& s, const HypersurfacePresentation& h,
                                const DeformationMap& candidate, const Limits& limits) {
  HH2Verdict v;
  v.cocycle = cocycle_check(s.system, candidate, limits);
  const Quiver& q = *s.quiver;
  bool jac = false, comm = false;
  for (const auto& [lhs, val] : candidate.entries) {
    if (val.is_zero()) continue;
    if (lhs == s.system.pair(0).lhs) jac = true;
    else comm = true;
  }
  v.kind = jac ? (comm ? HH2Kind::mixed : HH2Kind::jacobian) : (comm ? HH2Kind::commutator : HH2Kind::zero);

  // a_ki is the coefficient on xk xi (k > i); the condition reads
  // sum_i (a_ki - a_ik) df/dxi = 0 for each k.
  const auto& ring = candidate.ring;
  for (std::size_t p = 0; p < ring->size(); ++p) {
    auto a = [&](int k, int i) -> AlgebraElement {
      if (k <= i) return AlgebraElement();
      return linear_part(candidate.value(Path::of(q, {k - 1, i - 1})), p);
    };
    for (int k = 1; k <= h.d; ++k) {
      AlgebraElement sum;
      for (int i = 1; i <= h.d; ++i) sum += free_mul(q, a(k, i) - a(i, k), partial(s, h, i));
      sum = reduce(sum, s.system);
      if (!sum.is_zero()) v.n_residuals.emplace_back(ring->names()[p] + ", k=" + std::to_string(k), sum);
    }
  }
  return v;
}

}  // namespace qd
