#include "qd/ambiguity.hpp"

#include <map>
#include <sstream>

namespace qd {

std::string Ambiguity::to_string(const Quiver& q) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " | ";
    os << factors[i].to_string(q);
  }
  return os.str();
}

namespace {

Path concat(const Quiver& q, const std::vector<Path>& parts) {
  std::vector<int> ids;
  for (const auto& p : parts) ids.insert(ids.end(), p.arrows().begin(), p.arrows().end());
  return Path::of(q, std::move(ids));
}

Path slice(const Quiver& q, const std::vector<int>& ids, std::size_t from, std::size_t to) {
  return Path::of(q, std::vector<int>(ids.begin() + from, ids.begin() + to));
}

// u followed by every proper left subpath of w (trivial one included) stays
// irreducible.
bool minimal_junction(const ReductionSystem& r, const Path& u, const Path& w) {
  std::vector<int> ids(u.arrows());
  if (!r.is_irreducible(u)) return false;
  for (std::size_t i = 0; i + 1 < w.length(); ++i) {
    ids.push_back(w[i]);
    Path p = Path::of(r.quiver(), ids);
    // Only occurrences ending at the new arrow can be new.
    for (std::size_t s = 0; s < p.length(); ++s)
      if (auto m = r.match_at(p, s); m && s + r.pair(*m).lhs.length() == p.length()) return false;
  }
  return true;
}

// Minimal right extensions w of u with u w reducible.
std::vector<Path> extensions(const ReductionSystem& r, const Path& u) {
  const Quiver& q = r.quiver();
  std::map<Path, bool> found;
  for (std::size_t o = 0; o < u.length(); ++o) {
    std::size_t tail = u.length() - o;
    for (const auto& pr : r.pairs()) {
      const Path& s = pr.lhs;
      if (s.length() <= tail) continue;
      if (!std::equal(u.arrows().begin() + o, u.arrows().end(), s.arrows().begin())) continue;
      Path w = slice(q, s.arrows(), tail, s.length());
      if (!r.is_irreducible(w) || !minimal_junction(r, u, w)) continue;
      found.emplace(w, true);
    }
  }
  std::vector<Path> out;
  for (auto& [w, _] : found) out.push_back(w);
  return out;
}

void extend(const ReductionSystem& r, int n, std::size_t cap, std::vector<Path>& factors, std::size_t length,
            std::map<Path, Ambiguity>& out) {
  if (static_cast<int>(factors.size()) == n + 2) {
    Path p = concat(r.quiver(), factors);
    auto [it, inserted] = out.try_emplace(p);
    if (inserted) {
      it->second.path = p;
      it->second.degree = n;
      it->second.factors = factors;
    } else if (it->second.factors != factors) {
      throw Error("path " + p.to_string(r.quiver()) + " has two different ambiguity factorizations");
    }
    return;
  }
  for (const Path& w : extensions(r, factors.back())) {
    if (length + w.length() > cap)
      throw LimitExceeded("ambiguity chain exceeds length cap " + std::to_string(cap));
    factors.push_back(w);
    extend(r, n, cap, factors, length + w.length(), out);
    factors.pop_back();
  }
}

}  // namespace

bool satisfies_definition(const ReductionSystem& r, const std::vector<Path>& factors) {
  if (factors.size() < 2 || factors[0].length() != 1) return false;
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i].is_trivial() || !r.is_irreducible(factors[i])) return false;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    if (factors[i].target() != factors[i + 1].source()) return false;
    Path uv = concat(r.quiver(), {factors[i], factors[i + 1]});
    if (r.is_irreducible(uv)) return false;
    std::vector<int> ids(factors[i].arrows());
    for (std::size_t j = 0; j + 1 < factors[i + 1].length(); ++j) {
      ids.push_back(factors[i + 1][j]);
      if (!r.is_irreducible(Path::of(r.quiver(), ids))) return false;
    }
  }
  return true;
}

std::vector<Triple> triple_factorizations(const Path& p, const ReductionSystem& r) {
  std::vector<Triple> out;
  const Quiver& q = r.quiver();
  const auto& ids = p.arrows();
  for (std::size_t a = 1; a + 1 < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      Path uv = slice(q, ids, 0, b), vw = slice(q, ids, a, ids.size());
      if (r.find_pair(uv) && r.find_pair(vw))
        out.push_back({slice(q, ids, 0, a), slice(q, ids, a, b), slice(q, ids, b, ids.size())});
    }
  }
  return out;
}

std::vector<Ambiguity> enumerate(const ReductionSystem& r, int n, std::size_t length_cap) {
  if (n < 0) throw Error("ambiguity degree must be nonnegative");
  const Quiver& q = r.quiver();
  std::map<Path, Ambiguity> found;
  for (const auto& pr : r.pairs()) {
    const Path& s = pr.lhs;
    if (s.length() < 2) continue;
    Path u0 = Path::arrow(q, s[0]);
    Path u1 = slice(q, s.arrows(), 1, s.length());
    if (!r.is_irreducible(u1) || !minimal_junction(r, u0, u1)) continue;
    std::vector<Path> factors{u0, u1};
    extend(r, n, length_cap, factors, s.length(), found);
  }
  std::vector<Ambiguity> out;
  out.reserve(found.size());
  for (auto& [p, a] : found) {
    if (n == 1) a.triples = triple_factorizations(p, r);
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<std::size_t> bimodule_basis_dims(const ReductionSystem& r, int n, std::size_t length_cap) {
  std::vector<std::size_t> dims{r.quiver().vertices().size(), r.quiver().arrows().size()};
  for (int d = 0; d <= n; ++d) dims.push_back(enumerate(r, d, length_cap).size());
  return dims;
}

}  // namespace qd
