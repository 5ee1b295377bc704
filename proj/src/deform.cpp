#include "qd/deform.hpp"

#include <algorithm>
#include <sstream>

namespace qd {

AlgebraElement DeformationMap::value(const Path& s) const {
  auto it = entries.find(s);
  return it == entries.end() ? AlgebraElement(ring) : it->second;
}

int DeformationMap::max_param_degree() const {
  int d = -1;
  for (const auto& [s, v] : entries) d = std::max(d, v.max_param_degree());
  return d;
}

DeformationMap DeformationMap::with_truncation(Truncation t) const {
  DeformationMap out;
  out.ring = qd::with_truncation(ring, t);
  out.truncation_stated = true;
  for (const auto& [s, v] : entries) {
    AlgebraElement nv = v.rebased(out.ring);
    if (!nv.is_zero()) out.entries.emplace(s, std::move(nv));
  }
  return out;
}

DeformationMap DeformationMap::combination(const std::vector<std::pair<ParamPoly, DeformationMap>>& parts,
                                           const RingPtr& ring) {
  DeformationMap out;
  out.ring = ring;
  for (const auto& [c, m] : parts) {
    ParamPoly cc = c.rebased(ring);
    for (const auto& [s, v] : m.entries) {
      AlgebraElement term = v.rebased(ring).scaled(cc);
      auto [it, inserted] = out.entries.try_emplace(s, AlgebraElement(ring));
      it->second += term;
      if (it->second.is_zero()) out.entries.erase(it);
    }
  }
  return out;
}

bool operator==(const DeformationMap& a, const DeformationMap& b) {
  if (!(*a.ring == *b.ring) || a.entries.size() != b.entries.size()) return false;
  auto it = b.entries.begin();
  for (const auto& [s, v] : a.entries) {
    if (!(it->first == s) || !(it->second == v)) return false;
    ++it;
  }
  return true;
}

std::vector<std::string> check_deformation_map(const ReductionSystem& r, const DeformationMap& phi) {
  std::vector<std::string> problems;
  const Quiver& q = r.quiver();
  for (const auto& [s, v] : phi.entries) {
    if (!r.find_pair(s)) {
      problems.push_back(s.to_string(q) + " is not a reducible lhs of the system");
      continue;
    }
    for (const auto& [p, c] : v.terms()) {
      if (!p.parallel_to(s)) problems.push_back(p.to_string(q) + " is not parallel to " + s.to_string(q));
      if (!r.is_irreducible(p)) problems.push_back(p.to_string(q) + " in the value of " + s.to_string(q) + " is reducible");
      if (c.constant_term() != 0)
        problems.push_back("coefficient of " + p.to_string(q) + " in the value of " + s.to_string(q) +
                           " has a nonzero constant term");
    }
  }
  return problems;
}

StarProduct::StarProduct(const ReductionSystem& r, const DeformationMap& phi, Limits limits)
    : r_(&r), ring_(phi.ring), limits_(limits) {
  rhs_.reserve(r.size());
  for (const auto& pr : r.pairs()) {
    AlgebraElement v = pr.rhs.rebased(ring_);
    v += phi.value(pr.lhs).rebased(ring_);
    rhs_.push_back(std::move(v));
  }
  if (r.certificate()) {
    certified_ = !ring_->truncation().exact || degree_condition(phi, *r.certificate()).ok;
  }
  if (!limits_.max_steps) limits_.max_steps = certified_ ? UINT64_MAX : default_step_cap;
}

AlgebraElement StarProduct::rewrite(const AlgebraElement& a) {
  auto res = rewrite_with(a.rebased(ring_), *r_, rhs_, Strategy::rightmost, limits_, &stats_);
  if (!res.trace.terminated)
    throw LimitExceeded("star product reached the step cap of " + std::to_string(*limits_.max_steps) +
                        " rewrites (possible non-termination)");
  return std::move(res.value);
}

AlgebraElement StarProduct::operator()(const AlgebraElement& a, const AlgebraElement& b) {
  return rewrite(free_mul(r_->quiver(), a.rebased(ring_), b.rebased(ring_)));
}

AlgebraElement StarProduct::operator()(const Path& a, const Path& b) {
  return (*this)(AlgebraElement::of(a, ring_), AlgebraElement::of(b, ring_));
}

AlgebraElement StarProduct::project(const AlgebraElement& a) const {
  Limits l = limits_;
  if (!r_->certificate() && l.max_steps == UINT64_MAX) l.max_steps = default_step_cap;
  return reduce(a.rebased(ring_), *r_, Strategy::rightmost, l);
}

std::string MCReport::label() const {
  return truncation.exact ? "verified exactly" : "verified " + truncation.describe();
}

std::string MCReport::to_text(const Quiver& q) const {
  std::ostringstream os;
  for (const auto& rec : records) {
    os << (rec.pass ? "pass  " : "FAIL  ") << rec.path.to_string(q) << "  [" << rec.triple.u.to_string(q) << " | "
       << rec.triple.v.to_string(q) << " | " << rec.triple.w.to_string(q) << "]\n";
    if (!rec.pass) {
      os << "      u*(v*w) = " << rec.left.to_string(q) << "\n";
      os << "      (u*v)*w = " << rec.right.to_string(q) << "\n";
      os << "      residual = " << rec.residual.to_string(q) << "\n";
    }
  }
  os << (pass ? "Maurer-Cartan: pass" : "Maurer-Cartan: FAIL") << " (" << (pass ? label() : truncation.describe())
     << ", " << records.size() << " checks)\n";
  return os.str();
}

Truncation effective_truncation(const ReductionSystem& r, const DeformationMap& phi) {
  if (phi.truncation_stated) return phi.ring->truncation();
  if (r.certificate() && degree_condition(phi, *r.certificate()).ok) return Truncation::none();
  return Truncation::at(2 * std::max(1, phi.max_param_degree()));
}

MCReport mc_check(const ReductionSystem& r, const DeformationMap& phi, const MCOptions& opts) {
  MCReport rep;
  rep.truncation = opts.truncation ? *opts.truncation : effective_truncation(r, phi);
  DeformationMap tphi = phi.with_truncation(rep.truncation);
  StarProduct star(r, tphi, opts.limits);
  for (const auto& amb : enumerate(r, 1)) {
    for (const auto& t : amb.triples) {
      MCRecord rec{amb.path, t, {}, {}, {}, true};
      AlgebraElement u = star.project(AlgebraElement::of(t.u));
      AlgebraElement v = star.project(AlgebraElement::of(t.v));
      AlgebraElement w = star.project(AlgebraElement::of(t.w));
      rec.left = star(u, star(v, w));
      rec.right = star(star(u, v), w);
      rec.residual = rec.left - rec.right;
      rec.pass = rec.residual.is_zero();
      rep.pass = rep.pass && rec.pass;
      rep.records.push_back(std::move(rec));
    }
  }
  return rep;
}

std::vector<ParamPoly> residual_equations(const MCReport& report) {
  std::vector<ParamPoly> eqs;
  for (const auto& rec : report.records) {
    for (const auto& [p, c] : rec.residual.terms()) {
      ParamPoly n = c.normalized();
      if (std::find(eqs.begin(), eqs.end(), n) == eqs.end()) eqs.push_back(std::move(n));
    }
  }
  std::sort(eqs.begin(), eqs.end(), [](const ParamPoly& a, const ParamPoly& b) {
    if (a.max_degree() != b.max_degree()) return a.max_degree() < b.max_degree();
    return a.to_string() < b.to_string();
  });
  return eqs;
}

std::vector<ParamPoly> mc_residual_equations(const ReductionSystem& r, const DeformationMap& phi,
                                             const MCOptions& opts) {
  return residual_equations(mc_check(r, phi, opts));
}

CocycleReport cocycle_check(const ReductionSystem& r, const DeformationMap& phi, const Limits& limits) {
  CocycleReport rep;
  for (const auto& [s, v] : phi.entries)
    for (const auto& [p, c] : v.terms())
      if (c.min_degree() != 1 || c.max_degree() != 1) rep.homogeneous = false;
  MCOptions opts;
  opts.truncation = Truncation::at(1);
  opts.limits = limits;
  rep.mc = mc_check(r, phi, opts);
  return rep;
}

DegreeReport degree_condition(const DeformationMap& phi, const AdmissibleOrder& o,
                              const std::optional<std::set<Path>>& restrict_to) {
  DegreeReport rep;
  for (const auto& [s, v] : phi.entries) {
    if (restrict_to && !restrict_to->count(s)) continue;
    for (const auto& [p, c] : v.terms()) {
      if (o.compare(p, s) != Comparison::less) {
        rep.ok = false;
        rep.failures.emplace_back(s, p);
      }
    }
  }
  return rep;
}

AlgebraElement corner_product(StarProduct& star, int v, const AlgebraElement& a, const AlgebraElement& b) {
  for (const auto* e : {&a, &b})
    for (const auto& [p, c] : e->terms())
      if (p.source() != v || p.target() != v) throw Error("corner product needs loops at the chosen vertex");
  return star(a, b);
}

}  // namespace qd
