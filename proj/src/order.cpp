#include "qd/order.hpp"

#include <numeric>

#include "qd/param_poly.hpp"

namespace qd {

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::less: return "less";
    case Comparison::equal: return "equal";
    case Comparison::greater: return "greater";
    case Comparison::incomparable: return "incomparable";
  }
  return "?";
}

AdmissibleOrder::AdmissibleOrder(const Quiver& q, bool length_first, std::vector<Weights> stages,
                                 std::vector<int> precedence)
    : length_first_(length_first), stages_(std::move(stages)), precedence_(std::move(precedence)) {
  const std::size_t n = q.arrows().size();
  for (const auto& s : stages_) {
    if (s.size() != n) throw Error("weight stage must assign a weight to every arrow");
    for (auto w : s)
      if (w < 0) throw Error("weights must be nonnegative");
  }
  if (!length_first_) {
    if (stages_.empty()) throw Error("an order without length first needs a weight stage");
    for (auto w : stages_.front())
      if (w <= 0) throw Error("first weight stage must be positive when length is not compared first");
  }
  if (precedence_.size() != n) throw Error("precedence must list every arrow exactly once");
  rank_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    int a = precedence_[i];
    if (a < 0 || static_cast<std::size_t>(a) >= n || rank_[a] != -1)
      throw Error("precedence must list every arrow exactly once");
    rank_[a] = static_cast<int>(i);
  }
}

AdmissibleOrder AdmissibleOrder::length_lex(const Quiver& q) {
  std::vector<int> prec(q.arrows().size());
  std::iota(prec.begin(), prec.end(), 0);
  return AdmissibleOrder(q, true, {}, std::move(prec));
}

std::int64_t AdmissibleOrder::weight(std::size_t stage, const Path& p) const {
  std::int64_t w = 0;
  for (int a : p.arrows()) w += stages_[stage][a];
  return w;
}

Comparison AdmissibleOrder::compare(const Path& p, const Path& q) const {
  if (!p.parallel_to(q)) return Comparison::incomparable;
  auto by = [](auto a, auto b) {
    return a < b ? Comparison::less : (a > b ? Comparison::greater : Comparison::equal);
  };
  if (length_first_ && p.length() != q.length()) return by(p.length(), q.length());
  for (std::size_t s = 0; s < stages_.size(); ++s) {
    auto wp = weight(s, p), wq = weight(s, q);
    if (wp != wq) return by(wp, wq);
  }
  if (p.length() != q.length()) return by(p.length(), q.length());
  for (std::size_t i = 0; i < p.length(); ++i)
    if (p[i] != q[i]) return by(rank_[p[i]], rank_[q[i]]);
  return Comparison::equal;
}

}  // namespace qd
