#pragma once

#include <optional>
#include <string_view>

#include "qd/element.hpp"

namespace qd {

/// Parses sums of products such as "x0 y1 - 2*t1*x0 y0 + (t0 + t2^2)*x1 y1".
/// Arrow labels written next to each other compose; a label may carry ^k.
/// Identifiers that name a declared parameter are parameters; "e_V" is the
/// trivial path at V. A term without a path is placed at `default_vertex`
/// (an error if none is given).
AlgebraElement parse_element(const Quiver& q, const RingPtr& ring, std::string_view text,
                             std::optional<int> default_vertex = std::nullopt);

/// Parses a polynomial in the ring's parameters.
ParamPoly parse_poly(const RingPtr& ring, std::string_view text);

}  // namespace qd
