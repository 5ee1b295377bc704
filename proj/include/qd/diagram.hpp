#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qd/diamond.hpp"
#include "qd/rewrite.hpp"

namespace qd {

/// Per-chart order on the chart's generators: length first, then the weight
/// stages, then lexicographic by `precedence` (smallest first).
struct ChartOrder {
  std::vector<std::map<std::string, std::int64_t>> weight_stages;
  std::vector<std::string> precedence;

  bool operator==(const ChartOrder&) const = default;
};

struct ChartPair {
  std::vector<std::string> lhs;  // generator labels
  std::string rhs;               // element text over the chart's generators

  bool operator==(const ChartPair&) const = default;
};

struct ChartSpec {
  std::string label;
  std::vector<int> indices;  // ascending subset of 1..n
  std::vector<std::string> generators;
  std::vector<ChartPair> pairs;
  ChartOrder order;

  bool operator==(const ChartSpec&) const = default;
};

/// Inclusion arrow from chart `from` to chart `from` + {index}; `images`
/// sends each generator of `from` to element text over the target chart.
struct Restriction {
  std::string arrow;
  std::string from;
  std::string to;
  std::map<std::string, std::string> images;

  bool operator==(const Restriction&) const = default;
};

struct CoverSpec {
  int n = 0;
  std::vector<ChartSpec> charts;
  std::vector<Restriction> restrictions;

  const ChartSpec& chart(const std::string& label) const;
  bool operator==(const CoverSpec&) const = default;
};

enum class Origin { R0, R1, R2 };

std::string to_string(Origin o);

struct Provenance {
  Origin origin;
  std::vector<std::string> charts;  // chart(s) the pair comes from
};

struct BuiltDiagram {
  QuiverPtr quiver;
  ReductionSystem system;  // carries the derived global order as certificate
  std::vector<Provenance> provenance;  // parallel to system.pairs()
  AdmissibleOrder order;
  /// Loop arrow ids per chart label.
  std::map<std::string, std::vector<int>> chart_loops;

  /// Pairs whose provenance is in `origins`, as a standalone system.
  ReductionSystem subsystem(const std::vector<Origin>& origins) const;
  std::set<Path> lhs_with_origin(Origin o) const;
};

/// The quiver and chart system of one chart alone, for validating chart data.
ReductionSystem chart_system(const ChartSpec& chart);

/// Builds the diagram quiver and the reduction system R0 + R1 + R2. Throws
/// on invalid chart data, a reducible restriction image, or a label set that
/// is not closed under union.
BuiltDiagram build(const CoverSpec& cover);

enum class OverlapKind { intra_chart, chart_morphism, square };

std::string to_string(OverlapKind k);

struct DiagramCertificate {
  ConfluenceReport confluence;
  std::vector<OverlapKind> kinds;  // parallel to confluence.overlaps
};

DiagramCertificate certify(const BuiltDiagram& d, const Limits& limits = {});

CoverSpec zk_diagram(int k);
CoverSpec genus3_curve();
/// All nonempty subsets of 1..n, one free generator per chart.
CoverSpec hypercube_skeleton(int n);

}  // namespace qd
