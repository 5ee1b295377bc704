#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qd/element.hpp"
#include "qd/order.hpp"
#include "qd/quiver.hpp"

namespace qd {

struct ReductionPair {
  Path lhs;
  AlgebraElement rhs;
};

/// A set of pairs (s, phi_s) over one quiver, indexed for occurrence search.
class ReductionSystem {
 public:
  ReductionSystem() = default;
  ReductionSystem(QuiverPtr quiver, std::vector<ReductionPair> pairs);

  const QuiverPtr& quiver_ptr() const noexcept { return quiver_; }
  const Quiver& quiver() const noexcept { return *quiver_; }
  const std::vector<ReductionPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const ReductionPair& pair(std::size_t i) const { return pairs_.at(i); }

  /// Pair whose lhs occurs in p at `start`, if any.
  std::optional<std::size_t> match_at(const Path& p, std::size_t start) const;
  std::optional<std::size_t> find_pair(const Path& lhs) const;
  bool is_irreducible(const Path& p) const;

  struct Match {
    std::size_t start;
    std::size_t pair;
  };
  std::vector<Match> matches(const Path& p) const;
  std::optional<Match> rightmost(const Path& p) const;
  std::optional<Match> leftmost(const Path& p) const;

  const std::optional<AdmissibleOrder>& certificate() const noexcept { return certificate_; }
  /// Copy carrying `order` as termination certificate; throws if the order
  /// does not make every rhs smaller than its lhs.
  ReductionSystem with_certificate(const AdmissibleOrder& order) const;
  /// Copy without a certificate.
  ReductionSystem without_certificate() const;

  friend bool operator==(const ReductionSystem& a, const ReductionSystem& b);

 private:
  QuiverPtr quiver_;
  std::vector<ReductionPair> pairs_;
  std::vector<std::vector<std::size_t>> by_first_;
  std::optional<AdmissibleOrder> certificate_;
};

struct Violation {
  enum class Kind { short_lhs, duplicate, subpath, not_parallel, reducible_rhs };
  Kind kind;
  std::size_t pair;
  std::optional<std::size_t> other;
  std::string message;
};

std::string to_string(Violation::Kind k);

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the three conditions on a reduction system: no lhs is a subpath of
/// another, each rhs is parallel to its lhs, and each rhs is irreducible.
ValidationReport validate(const ReductionSystem& r);

struct TerminationReport {
  bool ok = true;
  /// (pair index, offending rhs path, comparison outcome)
  std::vector<std::tuple<std::size_t, Path, Comparison>> failures;
};

TerminationReport check_termination(const ReductionSystem& r, const AdmissibleOrder& o);

enum class Strategy { rightmost, leftmost, random };

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

constexpr std::uint64_t default_step_cap = 1'000'000;

struct Limits {
  /// Unset means: unlimited if the system carries a certificate, otherwise
  /// `default_step_cap`.
  std::optional<std::uint64_t> max_steps;
  std::uint64_t seed = 0;
  bool record_trace = false;
};

struct TraceStep {
  Path term;
  std::size_t start;
  std::size_t pair;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
  std::uint64_t count = 0;
  bool terminated = true;
};

struct NormalFormResult {
  AlgebraElement value;
  ReductionTrace trace;
};

/// Position rule for a single reduction step.
struct Position {
  enum class Rule { rightmost, leftmost, chosen } rule = Rule::rightmost;
  Path term;
  std::size_t start = 0;

  static Position right() { return {}; }
  static Position left() { return {Rule::leftmost, {}, 0}; }
  static Position at(Path term, std::size_t start) { return {Rule::chosen, std::move(term), start}; }
};

struct StepResult {
  AlgebraElement value;
  std::optional<TraceStep> step;  // empty when the input was irreducible
};

/// Applies exactly one reduction. Rightmost and leftmost act on the largest
/// reducible term in canonical path order.
StepResult reduce_once(const AlgebraElement& elem, const ReductionSystem& r, const Position& pos);

NormalFormResult normal_form(const AlgebraElement& elem, const ReductionSystem& r,
                             Strategy strategy = Strategy::rightmost, const Limits& limits = {});

/// Normal form that throws LimitExceeded when the step cap is reached.
AlgebraElement reduce(const AlgebraElement& elem, const ReductionSystem& r,
                      Strategy strategy = Strategy::rightmost, const Limits& limits = {});
AlgebraElement reduce(const Path& p, const ReductionSystem& r, const Limits& limits = {});

/// Replays a trace on an element; used to audit reductions.
AlgebraElement replay(const AlgebraElement& elem, const ReductionSystem& r, const ReductionTrace& trace);

struct RewriteStats {
  std::uint64_t steps = 0;
  /// Emitted terms whose rhs coefficient was a nonzero constant: the
  /// lowest coefficient degree is unchanged.
  std::uint64_t order_zero_terms = 0;
  /// Emitted terms whose rhs coefficient lies in the parameter ideal: the
  /// lowest coefficient degree strictly increases.
  std::uint64_t raising_terms = 0;
  /// Emitted terms whose rhs coefficient has both parts.
  std::uint64_t mixed_terms = 0;
};

/// Rewrites `elem` with per-pair replacements `rhs` (indexed like r's pairs)
/// until every path is irreducible with respect to r's lhs set.
NormalFormResult rewrite_with(const AlgebraElement& elem, const ReductionSystem& r,
                              const std::vector<AlgebraElement>& rhs, Strategy strategy,
                              const Limits& limits, RewriteStats* stats = nullptr);

}  // namespace qd
