#include "qd/rewrite.hpp"

#include <random>
#include <sstream>

namespace qd {

ReductionSystem::ReductionSystem(QuiverPtr quiver, std::vector<ReductionPair> pairs)
    : quiver_(std::move(quiver)), pairs_(std::move(pairs)) {
  if (!quiver_) throw Error("reduction system needs a quiver");
  by_first_.assign(quiver_->arrows().size(), {});
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].lhs.is_trivial()) throw Error("reduction lhs must contain an arrow");
    by_first_[pairs_[i].lhs[0]].push_back(i);
  }
}

std::optional<std::size_t> ReductionSystem::match_at(const Path& p, std::size_t start) const {
  if (start >= p.length()) return std::nullopt;
  for (std::size_t i : by_first_[p[start]])
    if (occurs_at(p, pairs_[i].lhs, start)) return i;
  return std::nullopt;
}

std::optional<std::size_t> ReductionSystem::find_pair(const Path& lhs) const {
  if (lhs.is_trivial()) return std::nullopt;
  for (std::size_t i : by_first_[lhs[0]])
    if (pairs_[i].lhs == lhs) return i;
  return std::nullopt;
}

bool ReductionSystem::is_irreducible(const Path& p) const {
  for (std::size_t s = 0; s < p.length(); ++s)
    if (match_at(p, s)) return false;
  return true;
}

std::vector<ReductionSystem::Match> ReductionSystem::matches(const Path& p) const {
  std::vector<Match> out;
  for (std::size_t s = 0; s < p.length(); ++s)
    for (std::size_t i : by_first_[p[s]])
      if (occurs_at(p, pairs_[i].lhs, s)) out.push_back({s, i});
  return out;
}

std::optional<ReductionSystem::Match> ReductionSystem::rightmost(const Path& p) const {
  for (std::size_t s = p.length(); s-- > 0;)
    if (auto i = match_at(p, s)) return Match{s, *i};
  return std::nullopt;
}

std::optional<ReductionSystem::Match> ReductionSystem::leftmost(const Path& p) const {
  for (std::size_t s = 0; s < p.length(); ++s)
    if (auto i = match_at(p, s)) return Match{s, *i};
  return std::nullopt;
}

ReductionSystem ReductionSystem::with_certificate(const AdmissibleOrder& order) const {
  auto rep = check_termination(*this, order);
  if (!rep.ok) throw Error("order does not certify termination");
  ReductionSystem out(*this);
  out.certificate_ = order;
  return out;
}

ReductionSystem ReductionSystem::without_certificate() const {
  ReductionSystem out(*this);
  out.certificate_.reset();
  return out;
}

bool operator==(const ReductionSystem& a, const ReductionSystem& b) {
  if (!(*a.quiver_ == *b.quiver_) || a.pairs_.size() != b.pairs_.size()) return false;
  for (std::size_t i = 0; i < a.pairs_.size(); ++i)
    if (!(a.pairs_[i].lhs == b.pairs_[i].lhs) || !(a.pairs_[i].rhs == b.pairs_[i].rhs)) return false;
  return a.certificate_ == b.certificate_;
}

std::string to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::short_lhs: return "short_lhs";
    case Violation::Kind::duplicate: return "duplicate";
    case Violation::Kind::subpath: return "subpath";
    case Violation::Kind::not_parallel: return "not_parallel";
    case Violation::Kind::reducible_rhs: return "reducible_rhs";
  }
  return "?";
}

ValidationReport validate(const ReductionSystem& r) {
  ValidationReport rep;
  const Quiver& q = r.quiver();
  const auto& pairs = r.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Path& s = pairs[i].lhs;
    if (s.length() < 2)
      rep.violations.push_back({Violation::Kind::short_lhs, i, std::nullopt,
                                "lhs " + s.to_string(q) + " has length < 2"});
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j) continue;
      const Path& t = pairs[j].lhs;
      if (s == t) {
        if (i < j)
          rep.violations.push_back({Violation::Kind::duplicate, i, j, "lhs " + s.to_string(q) + " is repeated"});
      } else if (!occurrences(t, s).empty()) {
        rep.violations.push_back({Violation::Kind::subpath, i, j,
                                  s.to_string(q) + " is a subpath of " + t.to_string(q)});
      }
    }
    for (const auto& [p, c] : pairs[i].rhs.terms()) {
      if (!p.parallel_to(s))
        rep.violations.push_back({Violation::Kind::not_parallel, i, std::nullopt,
                                  "rhs path " + p.to_string(q) + " is not parallel to " + s.to_string(q)});
      if (!r.is_irreducible(p))
        rep.violations.push_back({Violation::Kind::reducible_rhs, i, std::nullopt,
                                  "rhs path " + p.to_string(q) + " of " + s.to_string(q) + " is reducible"});
    }
  }
  return rep;
}

TerminationReport check_termination(const ReductionSystem& r, const AdmissibleOrder& o) {
  TerminationReport rep;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& pr = r.pair(i);
    for (const auto& [p, c] : pr.rhs.terms()) {
      auto cmp = o.compare(p, pr.lhs);
      if (cmp != Comparison::less) {
        rep.ok = false;
        rep.failures.emplace_back(i, p, cmp);
      }
    }
  }
  return rep;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::rightmost: return "rightmost";
    case Strategy::leftmost: return "leftmost";
    case Strategy::random: return "random";
  }
  return "?";
}

Strategy parse_strategy(const std::string& s) {
  if (s == "rightmost") return Strategy::rightmost;
  if (s == "leftmost") return Strategy::leftmost;
  if (s == "random") return Strategy::random;
  throw Error("unknown strategy '" + s + "'");
}

namespace {

void accumulate(std::map<Path, ParamPoly>& into, const Path& p, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto it = into.find(p);
  if (it == into.end()) {
    into.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) into.erase(it);
}

void apply_step(std::map<Path, ParamPoly>& into, const Path& term, const ParamPoly& coeff, std::size_t start,
                const Path& lhs, const AlgebraElement& rhs, RewriteStats* stats) {
  for (const auto& [p, c] : rhs.terms()) {
    ParamPoly nc = coeff * c;
    if (stats) {
      if (c.is_constant())
        ++stats->order_zero_terms;
      else if (c.constant_term() == 0)
        ++stats->raising_terms;
      else
        ++stats->mixed_terms;
    }
    if (nc.is_zero()) continue;
    accumulate(into, term.replaced(start, lhs.length(), p), nc);
  }
}

std::uint64_t resolve_cap(const ReductionSystem& r, const Limits& limits) {
  if (limits.max_steps) return *limits.max_steps;
  return r.certificate() ? UINT64_MAX : default_step_cap;
}

}  // namespace

NormalFormResult rewrite_with(const AlgebraElement& elem, const ReductionSystem& r,
                              const std::vector<AlgebraElement>& rhs, Strategy strategy, const Limits& limits,
                              RewriteStats* stats) {
  if (rhs.size() != r.size()) throw Error("replacement table does not match the reduction system");
  RingPtr ring = elem.ring();
  for (const auto& e : rhs) ring = common_ring(ring, e.ring());

  std::map<Path, ParamPoly> pending;
  for (const auto& [p, c] : elem.terms()) pending.emplace(p, c.ring() == ring ? c : c.rebased(ring));
  AlgebraElement done(ring);
  NormalFormResult out{AlgebraElement(ring), {}};
  const std::uint64_t cap = resolve_cap(r, limits);
  std::mt19937_64 rng(limits.seed);

  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Path term = it->first;
    ParamPoly coeff = std::move(it->second);
    pending.erase(it);

    std::optional<ReductionSystem::Match> m;
    if (strategy == Strategy::rightmost) {
      m = r.rightmost(term);
    } else if (strategy == Strategy::leftmost) {
      m = r.leftmost(term);
    } else {
      auto all = r.matches(term);
      if (!all.empty()) m = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    }
    if (!m) {
      done.add_term(term, coeff);
      continue;
    }
    if (out.trace.count >= cap) {
      out.trace.terminated = false;
      pending.emplace(term, std::move(coeff));
      break;
    }
    ++out.trace.count;
    if (stats) ++stats->steps;
    if (limits.record_trace) out.trace.steps.push_back({term, m->start, m->pair});
    apply_step(pending, term, coeff, m->start, r.pair(m->pair).lhs, rhs[m->pair], stats);
  }
  for (const auto& [p, c] : pending) done.add_term(p, c);
  out.value = std::move(done);
  return out;
}

NormalFormResult normal_form(const AlgebraElement& elem, const ReductionSystem& r, Strategy strategy,
                             const Limits& limits) {
  std::vector<AlgebraElement> rhs;
  rhs.reserve(r.size());
  for (const auto& p : r.pairs()) rhs.push_back(p.rhs);
  return rewrite_with(elem, r, rhs, strategy, limits);
}

AlgebraElement reduce(const AlgebraElement& elem, const ReductionSystem& r, Strategy strategy,
                      const Limits& limits) {
  auto res = normal_form(elem, r, strategy, limits);
  if (!res.trace.terminated)
    throw LimitExceeded("step cap of " + std::to_string(res.trace.count) +
                        " reductions reached (possible non-termination)");
  return std::move(res.value);
}

AlgebraElement reduce(const Path& p, const ReductionSystem& r, const Limits& limits) {
  return reduce(AlgebraElement::of(p), r, Strategy::rightmost, limits);
}

StepResult reduce_once(const AlgebraElement& elem, const ReductionSystem& r, const Position& pos) {
  const Path* term = nullptr;
  std::optional<ReductionSystem::Match> m;
  if (pos.rule == Position::Rule::chosen) {
    auto it = elem.terms().find(pos.term);
    if (it == elem.terms().end()) throw Error("chosen term is not present in the element");
    auto idx = r.match_at(pos.term, pos.start);
    if (!idx) throw Error("no reduction applies at the chosen position");
    term = &it->first;
    m = ReductionSystem::Match{pos.start, *idx};
  } else {
    for (auto it = elem.terms().rbegin(); it != elem.terms().rend(); ++it) {
      m = pos.rule == Position::Rule::rightmost ? r.rightmost(it->first) : r.leftmost(it->first);
      if (m) {
        term = &it->first;
        break;
      }
    }
  }
  if (!m) return {elem, std::nullopt};

  std::map<Path, ParamPoly> rest;
  for (const auto& [p, c] : elem.terms())
    if (!(p == *term)) rest.emplace(p, c);
  const ParamPoly& coeff = elem.terms().at(*term);
  apply_step(rest, *term, coeff, m->start, r.pair(m->pair).lhs, r.pair(m->pair).rhs, nullptr);
  AlgebraElement out(common_ring(elem.ring(), r.pair(m->pair).rhs.ring()));
  for (const auto& [p, c] : rest) out.add_term(p, c);
  return {std::move(out), TraceStep{*term, m->start, m->pair}};
}

AlgebraElement replay(const AlgebraElement& elem, const ReductionSystem& r, const ReductionTrace& trace) {
  AlgebraElement cur = elem;
  for (const auto& st : trace.steps) cur = reduce_once(cur, r, Position::at(st.term, st.start)).value;
  return cur;
}

}  // namespace qd
