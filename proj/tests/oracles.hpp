#pragma once

// Slow, independent reference computations used to cross-check the engine.

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qd/deform.hpp"
#include "qd/rewrite.hpp"

namespace oracle {

using namespace qd;

/// Every split p = u v w (all nonempty) with u v and v w left-hand sides and
/// no other left-hand side inside p except at its start, found by trying
/// every path of length at most `max_len` and every split. Keys are
/// (path, |u|, |v|).
inline std::set<std::tuple<Path, std::size_t, std::size_t>> overlaps(const ReductionSystem& r, std::size_t max_len) {
  const Quiver& q = r.quiver();
  std::set<std::tuple<Path, std::size_t, std::size_t>> out;
  std::vector<Path> layer;
  for (const auto& a : q.arrows()) layer.push_back(Path::arrow(q, a.id));
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    for (const Path& p : layer)
      for (std::size_t i = 1; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
          auto uv = p.subpath(q, 0, j), vw = p.subpath(q, i, len - i);
          if (!r.find_pair(uv) || !r.find_pair(vw)) continue;
          bool inner = false;
          for (std::size_t a = 1; a < len && !inner; ++a)
            for (std::size_t b = a + 2; b < len && !inner; ++b)
              if (r.find_pair(p.subpath(q, a, b - a))) inner = true;
          if (!inner) out.emplace(p, i, j - i);
        }
    std::vector<Path> next;
    for (const Path& p : layer)
      for (const auto& a : q.arrows())
        if (a.source == p.target()) next.push_back(*compose(q, p, Path::arrow(q, a.id)));
    layer = std::move(next);
  }
  return out;
}

/// Every normal form reachable by any sequence of single reductions, keyed by
/// rendering. Stops exploring after `max_states` states.
inline std::map<std::string, AlgebraElement> all_normal_forms(const AlgebraElement& start, const ReductionSystem& r,
                                                              std::size_t max_states = 20000) {
  const Quiver& q = r.quiver();
  std::map<std::string, AlgebraElement> seen, finals;
  std::vector<AlgebraElement> todo{start};
  seen.emplace(start.to_string(q), start);
  while (!todo.empty() && seen.size() < max_states) {
    AlgebraElement cur = todo.back();
    todo.pop_back();
    bool any = false;
    for (const auto& [p, c] : cur.terms())
      for (const auto& m : r.matches(p)) {
        any = true;
        AlgebraElement next = reduce_once(cur, r, Position::at(p, m.start)).value;
        if (seen.emplace(next.to_string(q), next).second) todo.push_back(next);
      }
    if (!any) finals.emplace(cur.to_string(q), cur);
  }
  return finals;
}

/// First-order reduction for a one-parameter linear datum. For each path it
/// computes the undeformed normal form and the t-coefficient of the deformed
/// one, always reducing at a caller-chosen or leftmost occurrence.
class FirstOrder {
 public:
  FirstOrder(const ReductionSystem& r, const DeformationMap& phi) : r_(r) {
    for (const auto& pr : r.pairs()) {
      AlgebraElement lin, v = phi.value(pr.lhs);
      for (const auto& [p, c] : v.terms())
        for (const auto& [e, x] : c.terms())
          if (total_degree(e) == 1) lin.add_term(p, x);
      psi_.push_back(lin);
    }
  }

  /// (normal form, first-order term) reducing first at `start`.
  std::pair<AlgebraElement, AlgebraElement> at(const Path& p, std::size_t start) {
    std::size_t pair = *r_.match_at(p, start);
    std::size_t len = r_.pair(pair).lhs.length();
    AlgebraElement nf, d;
    auto splice = [&](const Path& mid) { return p.replaced(start, len, mid); };
    for (const auto& [m, c] : r_.pair(pair).rhs.terms()) {
      auto [a, b] = eval(splice(m));
      nf += a.scaled(c.constant_term());
      d += b.scaled(c.constant_term());
    }
    for (const auto& [m, c] : psi_[pair].terms()) d += eval(splice(m)).first.scaled(c.constant_term());
    return {nf, d};
  }

  std::pair<AlgebraElement, AlgebraElement> eval(const Path& p) {
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    std::pair<AlgebraElement, AlgebraElement> out;
    auto m = r_.leftmost(p);
    if (!m) out = {AlgebraElement::of(p), AlgebraElement()};
    else out = at(p, m->start);
    memo_.emplace(p, out);
    return out;
  }

  /// True iff both ends of every overlap give the same first-order term.
  bool cocycle(const std::vector<std::tuple<Path, std::size_t, std::size_t>>& overlaps) {
    for (const auto& [p, u, v] : overlaps)
      if (!(at(p, 0).second == at(p, u).second)) return false;
    return true;
  }

 private:
  const ReductionSystem& r_;
  std::vector<AlgebraElement> psi_;
  std::map<Path, std::pair<AlgebraElement, AlgebraElement>> memo_;
};

}  // namespace oracle
