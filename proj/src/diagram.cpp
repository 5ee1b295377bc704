#include "qd/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qd/parse.hpp"

namespace qd {

const ChartSpec& CoverSpec::chart(const std::string& label) const {
  for (const auto& c : charts)
    if (c.label == label) return c;
  throw Error("unknown chart '" + label + "'");
}

std::string to_string(Origin o) {
  switch (o) {
    case Origin::R0: return "R0";
    case Origin::R1: return "R1";
    case Origin::R2: return "R2";
  }
  return "?";
}

std::string to_string(OverlapKind k) {
  switch (k) {
    case OverlapKind::intra_chart: return "intra-chart";
    case OverlapKind::chart_morphism: return "chart-morphism";
    case OverlapKind::square: return "square";
  }
  return "?";
}

ReductionSystem BuiltDiagram::subsystem(const std::vector<Origin>& origins) const {
  std::vector<ReductionPair> pairs;
  for (std::size_t i = 0; i < system.size(); ++i)
    if (std::find(origins.begin(), origins.end(), provenance[i].origin) != origins.end())
      pairs.push_back(system.pair(i));
  return ReductionSystem(quiver, std::move(pairs));
}

std::set<Path> BuiltDiagram::lhs_with_origin(Origin o) const {
  std::set<Path> out;
  for (std::size_t i = 0; i < system.size(); ++i)
    if (provenance[i].origin == o) out.insert(system.pair(i).lhs);
  return out;
}

namespace {

Path path_of_labels(const Quiver& q, const std::vector<std::string>& labels) {
  return Path::from_labels(q, labels);
}

std::vector<int> union_indices(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

AdmissibleOrder chart_order(const Quiver& q, const ChartSpec& c) {
  std::vector<AdmissibleOrder::Weights> stages;
  for (const auto& st : c.order.weight_stages) {
    AdmissibleOrder::Weights w(q.arrows().size(), 0);
    for (const auto& [g, v] : st) w[q.arrow_id(g)] = v;
    stages.push_back(std::move(w));
  }
  std::vector<int> prec;
  for (const auto& g : c.order.precedence) prec.push_back(q.arrow_id(g));
  if (prec.size() != q.arrows().size())
    throw Error("chart '" + c.label + "': precedence must list every generator once");
  return AdmissibleOrder(q, true, std::move(stages), std::move(prec));
}

}  // namespace

ReductionSystem chart_system(const ChartSpec& chart) {
  auto q = std::make_shared<Quiver>();
  q->add_vertex(chart.label);
  for (const auto& g : chart.generators) q->add_arrow(g, 0, 0);
  std::vector<ReductionPair> pairs;
  for (const auto& p : chart.pairs)
    pairs.push_back({path_of_labels(*q, p.lhs), parse_element(*q, scalar_ring(), p.rhs, 0)});
  ReductionSystem r(q, std::move(pairs));
  auto rep = validate(r);
  if (!rep.ok()) throw Error("chart '" + chart.label + "': " + rep.violations.front().message);
  AdmissibleOrder o = chart_order(*q, chart);
  if (!check_termination(r, o).ok) throw Error("chart '" + chart.label + "': order does not certify termination");
  return r.with_certificate(o);
}

BuiltDiagram build(const CoverSpec& cover) {
  BuiltDiagram out;
  auto q = std::make_shared<Quiver>();
  std::map<std::vector<int>, std::string> by_indices;
  std::vector<ReductionSystem> chart_systems;

  for (const auto& c : cover.charts) {
    if (c.indices.empty() || !std::is_sorted(c.indices.begin(), c.indices.end()) ||
        std::adjacent_find(c.indices.begin(), c.indices.end()) != c.indices.end() || c.indices.front() < 1 ||
        c.indices.back() > cover.n)
      throw Error("chart '" + c.label + "' needs an ascending nonempty subset of 1.." + std::to_string(cover.n));
    if (!by_indices.emplace(c.indices, c.label).second)
      throw Error("two charts share the index set of '" + c.label + "'");
    q->add_vertex(c.label);
    chart_systems.push_back(chart_system(c));
  }
  for (const auto& [a, la] : by_indices)
    for (const auto& [b, lb] : by_indices)
      if (!by_indices.count(union_indices(a, b)))
        throw Error("charts '" + la + "' and '" + lb + "' have no chart for their intersection");

  for (const auto& c : cover.charts) {
    std::vector<int> ids;
    int v = q->vertex_id(c.label);
    for (const auto& g : c.generators) ids.push_back(q->add_arrow(g, v, v));
    out.chart_loops[c.label] = ids;
  }

  // Inclusion arrows, one per (chart, added index).
  std::map<std::pair<std::string, int>, const Restriction*> restriction_of;
  for (const auto& r : cover.restrictions) {
    const ChartSpec& from = cover.chart(r.from);
    const ChartSpec& to = cover.chart(r.to);
    std::vector<int> extra;
    std::set_difference(to.indices.begin(), to.indices.end(), from.indices.begin(), from.indices.end(),
                        std::back_inserter(extra));
    if (extra.size() != 1 || to.indices.size() != from.indices.size() + 1)
      throw Error("restriction '" + r.arrow + "' must add exactly one index");
    if (!restriction_of.emplace(std::make_pair(from.label, extra[0]), &r).second)
      throw Error("two restrictions from '" + from.label + "' add index " + std::to_string(extra[0]));
  }
  for (const auto& c : cover.charts)
    for (int j = 1; j <= cover.n; ++j) {
      if (std::binary_search(c.indices.begin(), c.indices.end(), j)) continue;
      auto bigger = union_indices(c.indices, {j});
      if (by_indices.count(bigger) && !restriction_of.count({c.label, j}))
        throw Error("missing restriction from '" + c.label + "' adding index " + std::to_string(j));
    }
  std::vector<int> f_arrows;
  std::map<std::pair<std::string, int>, int> f_id;
  for (const auto& c : cover.charts)
    for (int j = 1; j <= cover.n; ++j) {
      auto it = restriction_of.find({c.label, j});
      if (it == restriction_of.end()) continue;
      int id = q->add_arrow(it->second->arrow, it->second->from, it->second->to);
      f_arrows.push_back(id);
      f_id[{c.label, j}] = id;
    }

  std::vector<ReductionPair> pairs;
  auto& prov = out.provenance;

  // R0: chart relations.
  for (std::size_t ci = 0; ci < cover.charts.size(); ++ci) {
    const auto& c = cover.charts[ci];
    int v = q->vertex_id(c.label);
    for (const auto& p : c.pairs) {
      pairs.push_back({path_of_labels(*q, p.lhs), parse_element(*q, scalar_ring(), p.rhs, v)});
      prov.push_back({Origin::R0, {c.label}});
    }
  }
  // R1: generators commuted past inclusion arrows.
  std::size_t max_level = 0;
  for (const auto& c : cover.charts) max_level = std::max(max_level, c.indices.size());
  std::vector<std::size_t> image_len(max_level + 2, 0);
  for (const auto& c : cover.charts)
    for (int j = 1; j <= cover.n; ++j) {
      auto it = restriction_of.find({c.label, j});
      if (it == restriction_of.end()) continue;
      const Restriction& r = *it->second;
      const ChartSpec& to = cover.chart(r.to);
      std::size_t ti = 0;
      while (cover.charts[ti].label != to.label) ++ti;
      const ReductionSystem& target = chart_systems[ti];
      int tv = q->vertex_id(to.label);
      Path f = Path::arrow(*q, f_id.at({c.label, j}));
      for (const auto& g : c.generators) {
        auto im = r.images.find(g);
        if (im == r.images.end())
          throw Error("restriction '" + r.arrow + "' gives no image for '" + g + "'");
        AlgebraElement local = parse_element(target.quiver(), scalar_ring(), im->second, 0);
        for (const auto& [p, coeff] : local.terms()) {
          if (!target.is_irreducible(p))
            throw Error("image of '" + g + "' under '" + r.arrow + "' is reducible in chart '" + to.label + "'");
          image_len[c.indices.size()] = std::max(image_len[c.indices.size()], p.length());
        }
        AlgebraElement image = parse_element(*q, scalar_ring(), im->second, tv);
        Path lhs = Path::of(*q, {q->arrow_id(g), f[0]});
        pairs.push_back({lhs, free_mul(*q, AlgebraElement::of(f), image)});
        prov.push_back({Origin::R1, {c.label, to.label}});
      }
    }
  // R2: squares of inclusions, reordered to ascending added index.
  for (const auto& c : cover.charts)
    for (int j = 1; j <= cover.n; ++j)
      for (int k = j + 1; k <= cover.n; ++k) {
        if (!f_id.count({c.label, j}) || !f_id.count({c.label, k})) continue;
        const std::string& cj = by_indices.at(union_indices(c.indices, {j}));
        const std::string& ck = by_indices.at(union_indices(c.indices, {k}));
        if (!f_id.count({ck, j}) || !f_id.count({cj, k})) continue;
        Path lhs = Path::of(*q, {f_id.at({c.label, k}), f_id.at({ck, j})});
        Path rhs = Path::of(*q, {f_id.at({c.label, j}), f_id.at({cj, k})});
        pairs.push_back({lhs, AlgebraElement::of(rhs)});
        prov.push_back({Origin::R2, {c.label, ck, cj, by_indices.at(union_indices(c.indices, {j, k}))}});
      }

  // Global order: level weights so that every R1 pair drops in the first
  // stage, then the chart stages, then lex by chart precedence and f arrows.
  std::vector<std::int64_t> level_weight(max_level + 2, 1);
  for (std::size_t m = max_level; m-- > 1;)
    level_weight[m] = 1 + static_cast<std::int64_t>(image_len[m]) * level_weight[m + 1];
  const std::size_t na = q->arrows().size();
  AdmissibleOrder::Weights first(na, 1);
  std::size_t nstages = 0;
  for (const auto& c : cover.charts) {
    for (int a : out.chart_loops[c.label]) first[a] = level_weight[c.indices.size()];
    nstages = std::max(nstages, c.order.weight_stages.size());
  }
  std::vector<AdmissibleOrder::Weights> stages{first};
  for (std::size_t s = 0; s < nstages; ++s) {
    AdmissibleOrder::Weights w(na, 0);
    for (const auto& c : cover.charts)
      if (s < c.order.weight_stages.size())
        for (const auto& [g, val] : c.order.weight_stages[s]) w[q->arrow_id(g)] = val;
    stages.push_back(std::move(w));
  }
  std::vector<int> prec;
  for (const auto& c : cover.charts)
    for (const auto& g : c.order.precedence) prec.push_back(q->arrow_id(g));
  prec.insert(prec.end(), f_arrows.begin(), f_arrows.end());
  out.order = AdmissibleOrder(*q, false, std::move(stages), std::move(prec));

  out.quiver = q;
  ReductionSystem sys(q, std::move(pairs));
  auto rep = validate(sys);
  if (!rep.ok()) throw Error("built system is not a reduction system: " + rep.violations.front().message);
  out.system = check_termination(sys, out.order).ok ? sys.with_certificate(out.order) : sys;
  return out;
}

DiagramCertificate certify(const BuiltDiagram& d, const Limits& limits) {
  DiagramCertificate cert;
  cert.confluence = check_diamond(d.system, limits);
  const Quiver& q = *d.quiver;
  for (const auto& o : cert.confluence.overlaps) {
    std::size_t inclusions = 0;
    for (int a : o.path.arrows())
      if (q.arrow(a).source != q.arrow(a).target) ++inclusions;
    cert.kinds.push_back(inclusions == 0   ? OverlapKind::intra_chart
                         : inclusions == 1 ? OverlapKind::chart_morphism
                                           : OverlapKind::square);
  }
  return cert;
}

CoverSpec zk_diagram(int k) {
  if (k < 1) throw Error("k must be positive");
  CoverSpec c;
  c.n = 2;
  c.charts.push_back({"U", {1}, {"z", "u"}, {{{"u", "z"}, "z u"}}, {{}, {"z", "u"}}});
  c.charts.push_back({"V", {2}, {"ζ", "v"}, {{{"v", "ζ"}, "ζ v"}}, {{}, {"ζ", "v"}}});
  c.charts.push_back({"UV",
                      {1, 2},
                      {"x", "y", "w"},
                      {{{"w", "x"}, "x w"}, {{"w", "y"}, "y w"}, {{"x", "y"}, "1"}, {{"y", "x"}, "1"}},
                      {{}, {"x", "y", "w"}}});
  c.restrictions.push_back({"f", "U", "UV", {{"z", "x"}, {"u", "w"}}});
  c.restrictions.push_back({"g", "V", "UV", {{"ζ", "y"}, {"v", "x^" + std::to_string(k) + " w"}}});
  return c;
}

CoverSpec genus3_curve() {
  CoverSpec c;
  c.n = 2;
  c.charts.push_back({"U", {1}, {"z", "u"}, {{{"u", "z"}, "z u"}, {{"u", "u", "u", "u"}, "-z^3 u - z"}}, {{}, {"z", "u"}}});
  c.charts.push_back(
      {"V", {2}, {"ζ", "v"}, {{{"v", "ζ"}, "ζ v"}, {{"v", "v", "v", "v"}, "-ζ^3 - v"}}, {{}, {"ζ", "v"}}});
  c.charts.push_back({"UV",
                      {1, 2},
                      {"x", "y", "w"},
                      {{{"w", "x"}, "x w"},
                       {{"w", "y"}, "y w"},
                       {{"x", "y"}, "1"},
                       {{"y", "x"}, "1"},
                       {{"w", "w", "w", "w"}, "-x^3 w - x"}},
                      {{}, {"x", "y", "w"}}});
  c.restrictions.push_back({"f", "U", "UV", {{"z", "x"}, {"u", "w"}}});
  c.restrictions.push_back({"g", "V", "UV", {{"ζ", "y"}, {"v", "y w"}}});
  return c;
}

CoverSpec hypercube_skeleton(int n) {
  if (n < 1 || n > 4) throw Error("hypercube skeleton supports 1 <= n <= 4");
  CoverSpec c;
  c.n = n;
  auto name = [](const std::vector<int>& idx) {
    std::string s;
    for (int i : idx) s += std::to_string(i);
    return s;
  };
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) idx.push_back(i + 1);
    subsets.push_back(idx);
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
  for (const auto& idx : subsets) {
    std::string l = name(idx);
    c.charts.push_back({l, idx, {"x" + l}, {}, {{}, {"x" + l}}});
  }
  for (const auto& idx : subsets)
    for (int j = 1; j <= n; ++j) {
      if (std::binary_search(idx.begin(), idx.end(), j)) continue;
      auto big = union_indices(idx, {j});
      c.restrictions.push_back({"f" + name(idx) + "_" + std::to_string(j), name(idx), name(big),
                                {{"x" + name(idx), "x" + name(big)}}});
    }
  return c;
}

}  // namespace qd
