#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qd/quiver.hpp"

namespace qd {

enum class Comparison { less, equal, greater, incomparable };

std::string to_string(Comparison c);

/// Path order built from additive pieces: optionally length first, then each
/// weight stage, then length (if not already used), then left-to-right
/// lexicographic comparison by arrow precedence.
///
/// When `length_first` is false the first weight stage must be strictly
/// positive on every arrow so the order stays well founded.
class AdmissibleOrder {
 public:
  using Weights = std::vector<std::int64_t>;

  AdmissibleOrder() = default;
  /// `precedence` lists arrow ids from smallest to largest and must be a
  /// permutation of all arrows; every weight stage has one entry per arrow.
  AdmissibleOrder(const Quiver& q, bool length_first, std::vector<Weights> stages,
                  std::vector<int> precedence);
  /// Length-first lex order using arrow ids as precedence.
  static AdmissibleOrder length_lex(const Quiver& q);

  bool length_first() const noexcept { return length_first_; }
  const std::vector<Weights>& stages() const noexcept { return stages_; }
  const std::vector<int>& precedence() const noexcept { return precedence_; }

  std::int64_t weight(std::size_t stage, const Path& p) const;
  Comparison compare(const Path& p, const Path& q) const;
  bool less(const Path& p, const Path& q) const { return compare(p, q) == Comparison::less; }

  friend bool operator==(const AdmissibleOrder&, const AdmissibleOrder&) = default;

 private:
  bool length_first_ = true;
  std::vector<Weights> stages_;
  std::vector<int> precedence_;
  std::vector<int> rank_;
};

}  // namespace qd
