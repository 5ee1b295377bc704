#pragma once

#include <string>
#include <vector>

#include "qd/ambiguity.hpp"
#include "qd/rewrite.hpp"

namespace qd {

enum class OverlapStatus { resolved, failed, cap };

std::string to_string(OverlapStatus s);

struct OverlapRecord {
  Path path;
  Triple triple;
  AlgebraElement left_step;   // uv replaced
  AlgebraElement right_step;  // vw replaced
  AlgebraElement left_nf;
  AlgebraElement right_nf;
  OverlapStatus status = OverlapStatus::resolved;
};

struct ConfluenceReport {
  std::vector<OverlapRecord> overlaps;
  bool confluent() const;
  std::size_t count(OverlapStatus s) const;
  /// Two-branch rendering of every overlap.
  std::string to_text(const Quiver& q) const;
};

/// Reduces both one-step branches of every overlap and every triple
/// factorization to normal form and compares them.
ConfluenceReport check_diamond(const ReductionSystem& r, const Limits& limits = {});

}  // namespace qd
