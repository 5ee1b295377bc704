#include "qd/diamond.hpp"

#include <sstream>

namespace qd {

std::string to_string(OverlapStatus s) {
  switch (s) {
    case OverlapStatus::resolved: return "resolved";
    case OverlapStatus::failed: return "failed";
    case OverlapStatus::cap: return "cap";
  }
  return "?";
}

bool ConfluenceReport::confluent() const {
  for (const auto& o : overlaps)
    if (o.status != OverlapStatus::resolved) return false;
  return true;
}

std::size_t ConfluenceReport::count(OverlapStatus s) const {
  std::size_t n = 0;
  for (const auto& o : overlaps) n += o.status == s;
  return n;
}

std::string ConfluenceReport::to_text(const Quiver& q) const {
  std::ostringstream os;
  for (const auto& o : overlaps) {
    std::string uv = o.triple.u.to_string(q) + " " + o.triple.v.to_string(q);
    std::string vw = o.triple.v.to_string(q) + " " + o.triple.w.to_string(q);
    os << o.path.to_string(q) << "  [" << o.triple.u.to_string(q) << " | " << o.triple.v.to_string(q)
       << " | " << o.triple.w.to_string(q) << "]\n";
    os << "  +- " << uv << " -> " << o.left_step.to_string(q) << "\n";
    os << "  |    => " << o.left_nf.to_string(q) << "\n";
    os << "  +- " << vw << " -> " << o.right_step.to_string(q) << "\n";
    os << "       => " << o.right_nf.to_string(q) << "\n";
    os << "  " << to_string(o.status) << "\n";
  }
  os << overlaps.size() << " overlaps, " << count(OverlapStatus::resolved) << " resolved, "
     << count(OverlapStatus::failed) << " failed, " << count(OverlapStatus::cap) << " hit the step cap\n";
  return os.str();
}

ConfluenceReport check_diamond(const ReductionSystem& r, const Limits& limits) {
  ConfluenceReport rep;
  for (const auto& amb : enumerate(r, 1)) {
    for (const auto& t : amb.triples) {
      OverlapRecord rec{amb.path, t, {}, {}, {}, {}, OverlapStatus::resolved};
      AlgebraElement start = AlgebraElement::of(amb.path);
      rec.left_step = reduce_once(start, r, Position::at(amb.path, 0)).value;
      rec.right_step = reduce_once(start, r, Position::at(amb.path, t.u.length())).value;
      auto l = normal_form(rec.left_step, r, Strategy::rightmost, limits);
      auto rr = normal_form(rec.right_step, r, Strategy::rightmost, limits);
      rec.left_nf = l.value;
      rec.right_nf = rr.value;
      if (!l.trace.terminated || !rr.trace.terminated)
        rec.status = OverlapStatus::cap;
      else if (!(rec.left_nf == rec.right_nf))
        rec.status = OverlapStatus::failed;
      rep.overlaps.push_back(std::move(rec));
    }
  }
  return rep;
}

}  // namespace qd
