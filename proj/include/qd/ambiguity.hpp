#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "qd/rewrite.hpp"

namespace qd {

struct Triple {
  Path u, v, w;
};

/// An n-ambiguity u0 u1 ... u_{n+1}; degree 1 elements are overlaps.
struct Ambiguity {
  Path path;
  int degree = 0;
  std::vector<Path> factors;
  /// Only filled for degree 1.
  std::vector<Triple> triples;

  std::string to_string(const Quiver& q) const;
};

constexpr std::size_t default_ambiguity_length_cap = 256;

/// All n-ambiguities in canonical path order; degree 0 gives S itself.
/// Throws LimitExceeded if a chain grows beyond `length_cap` arrows.
std::vector<Ambiguity> enumerate(const ReductionSystem& r, int n,
                                 std::size_t length_cap = default_ambiguity_length_cap);

/// Every split p = u v w with u v and v w left-hand sides, all nonempty.
std::vector<Triple> triple_factorizations(const Path& p, const ReductionSystem& r);

/// Checks the defining clauses of an n-ambiguity for a given factorization.
bool satisfies_definition(const ReductionSystem& r, const std::vector<Path>& factors);

/// |S_0|, |S_1|, ..., |S_{n+2}|.
std::vector<std::size_t> bimodule_basis_dims(const ReductionSystem& r, int n,
                                             std::size_t length_cap = default_ambiguity_length_cap);

}  // namespace qd
