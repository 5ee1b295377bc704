#include "qd/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qd/param_poly.hpp"

namespace qd {

int Quiver::add_vertex(std::string label) {
  if (label.empty()) throw Error("vertex label must be nonempty");
  if (vertex_index_.count(label)) throw Error("duplicate vertex label '" + label + "'");
  int id = static_cast<int>(vertices_.size());
  vertex_index_.emplace(label, id);
  vertices_.push_back({id, std::move(label)});
  return id;
}

int Quiver::add_arrow(std::string label, int source, int target) {
  if (label.empty()) throw Error("arrow label must be nonempty");
  if (arrow_index_.count(label)) throw Error("duplicate arrow label '" + label + "'");
  int nv = static_cast<int>(vertices_.size());
  if (source < 0 || source >= nv || target < 0 || target >= nv)
    throw Error("arrow '" + label + "' references an unknown vertex");
  int id = static_cast<int>(arrows_.size());
  arrow_index_.emplace(label, id);
  arrows_.push_back({id, std::move(label), source, target});
  return id;
}

int Quiver::add_arrow(std::string label, std::string_view source, std::string_view target) {
  return add_arrow(std::move(label), vertex_id(source), vertex_id(target));
}

std::optional<int> Quiver::find_vertex(std::string_view label) const {
  auto it = vertex_index_.find(std::string(label));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::find_arrow(std::string_view label) const {
  auto it = arrow_index_.find(std::string(label));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

int Quiver::vertex_id(std::string_view label) const {
  auto v = find_vertex(label);
  if (!v) throw Error("unknown vertex '" + std::string(label) + "'");
  return *v;
}

int Quiver::arrow_id(std::string_view label) const {
  auto a = find_arrow(label);
  if (!a) throw Error("unknown arrow '" + std::string(label) + "'");
  return *a;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_.size() != b.vertices_.size() || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i)
    if (a.vertices_[i].label != b.vertices_[i].label) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto &x = a.arrows_[i], &y = b.arrows_[i];
    if (x.label != y.label || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

Path Path::trivial(int vertex) { return Path({}, vertex, vertex); }

Path Path::of(const Quiver& q, std::vector<int> arrows) {
  if (arrows.empty()) throw Error("use Path::trivial for paths without arrows");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source)
      throw Error("arrows '" + q.arrow(arrows[i]).label + "' and '" + q.arrow(arrows[i + 1]).label +
                  "' do not compose");
  int s = q.arrow(arrows.front()).source;
  int t = q.arrow(arrows.back()).target;
  return Path(std::move(arrows), s, t);
}

Path Path::arrow(const Quiver& q, int arrow_id) {
  const auto& a = q.arrow(arrow_id);
  return Path({arrow_id}, a.source, a.target);
}

Path Path::from_labels(const Quiver& q, const std::vector<std::string>& labels) {
  std::vector<int> ids;
  ids.reserve(labels.size());
  for (const auto& l : labels) ids.push_back(q.arrow_id(l));
  return of(q, std::move(ids));
}

Path Path::parse(const Quiver& q, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() > 2 && text[0] == 'e' && (text[1] == ':' || text[1] == '_')) {
    auto v = q.find_vertex(text.substr(2));
    if (v && !q.find_arrow(text)) return trivial(*v);
  }
  std::vector<int> ids;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == '*') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '.' &&
           text[j] != '*' && text[j] != '^')
      ++j;
    int id = q.arrow_id(text.substr(i, j - i));
    int power = 1;
    if (j < text.size() && text[j] == '^') {
      std::size_t k = j + 1;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (k == j + 1) throw Error("missing exponent in path '" + std::string(text) + "'");
      power = std::stoi(std::string(text.substr(j + 1, k - j - 1)));
      j = k;
    }
    for (int p = 0; p < power; ++p) ids.push_back(id);
    i = j;
  }
  return of(q, std::move(ids));
}

Path Path::subpath(const Quiver& q, std::size_t start, std::size_t len) const {
  std::vector<int> ids(arrows_.begin() + start, arrows_.begin() + start + len);
  return of(q, std::move(ids));
}

Path Path::replaced(std::size_t start, std::size_t len, const Path& middle) const {
  std::vector<int> ids;
  ids.reserve(arrows_.size() - len + middle.arrows_.size());
  ids.insert(ids.end(), arrows_.begin(), arrows_.begin() + start);
  ids.insert(ids.end(), middle.arrows_.begin(), middle.arrows_.end());
  ids.insert(ids.end(), arrows_.begin() + start + len, arrows_.end());
  return Path(std::move(ids), source_, target_);
}

std::string Path::to_string(const Quiver& q) const {
  if (arrows_.empty()) return "e_" + q.vertex(source_).label;
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < arrows_.size()) {
    std::size_t j = i;
    while (j < arrows_.size() && arrows_[j] == arrows_[i]) ++j;
    if (!first) os << ' ';
    first = false;
    os << q.arrow(arrows_[i]).label;
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::vector<std::string> Path::labels(const Quiver& q) const {
  std::vector<std::string> out;
  out.reserve(arrows_.size());
  for (int a : arrows_) out.push_back(q.arrow(a).label);
  return out;
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.arrows_.size() <=> b.arrows_.size(); c != 0) return c;
  if (auto c = a.arrows_ <=> b.arrows_; c != 0) return c;
  if (auto c = a.source_ <=> b.source_; c != 0) return c;
  return a.target_ <=> b.target_;
}

std::optional<Path> compose(const Quiver& q, const Path& p, const Path& r) {
  if (p.target() != r.source()) return std::nullopt;
  if (p.is_trivial()) return r;
  if (r.is_trivial()) return p;
  std::vector<int> ids(p.arrows());
  ids.insert(ids.end(), r.arrows().begin(), r.arrows().end());
  return Path::of(q, std::move(ids));
}

bool occurs_at(const Path& p, const Path& s, std::size_t start) {
  if (start + s.length() > p.length()) return false;
  return std::equal(s.arrows().begin(), s.arrows().end(), p.arrows().begin() + start);
}

std::vector<std::size_t> occurrences(const Path& p, const Path& s) {
  std::vector<std::size_t> out;
  if (s.length() == 0 || s.length() > p.length()) return out;
  for (std::size_t i = 0; i + s.length() <= p.length(); ++i)
    if (occurs_at(p, s, i)) out.push_back(i);
  return out;
}

std::size_t PathHash::operator()(const Path& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.source()) * 1000003u + static_cast<std::size_t>(p.target());
  for (int a : p.arrows()) h = h * 31u + static_cast<std::size_t>(a) + 7u;
  return h;
}

}  // namespace qd
