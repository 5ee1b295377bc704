#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qd {

struct Vertex {
  int id;
  std::string label;
};

struct Arrow {
  int id;
  std::string label;
  int source;
  int target;
};

/// Finite quiver with labelled vertices and arrows. Ids are positions.
class Quiver {
 public:
  Quiver() = default;

  int add_vertex(std::string label);
  int add_arrow(std::string label, int source, int target);
  int add_arrow(std::string label, std::string_view source, std::string_view target);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Vertex& vertex(int id) const { return vertices_.at(id); }
  const Arrow& arrow(int id) const { return arrows_.at(id); }

  std::optional<int> find_vertex(std::string_view label) const;
  std::optional<int> find_arrow(std::string_view label) const;
  int vertex_id(std::string_view label) const;
  int arrow_id(std::string_view label) const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> arrow_index_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// A path read left to right: a1 a2 ... an with target(ai) = source(ai+1).
/// The trivial path e_v has no arrows and source = target = v.
class Path {
 public:
  Path() = default;
  static Path trivial(int vertex);
  /// Checks composability; throws on mismatch or empty input.
  static Path of(const Quiver& q, std::vector<int> arrows);
  static Path arrow(const Quiver& q, int arrow_id);
  /// Parses labels separated by spaces or dots, with optional ^k powers;
  /// "e:V" or "e_V" denotes a trivial path.
  static Path parse(const Quiver& q, std::string_view text);
  static Path from_labels(const Quiver& q, const std::vector<std::string>& labels);

  bool is_trivial() const noexcept { return arrows_.empty(); }
  std::size_t length() const noexcept { return arrows_.size(); }
  int source() const noexcept { return source_; }
  int target() const noexcept { return target_; }
  const std::vector<int>& arrows() const noexcept { return arrows_; }
  int operator[](std::size_t i) const { return arrows_[i]; }

  bool parallel_to(const Path& other) const {
    return source_ == other.source_ && target_ == other.target_;
  }

  /// Arrows [start, start+len) as a path; len must be positive.
  Path subpath(const Quiver& q, std::size_t start, std::size_t len) const;
  /// Arrows [start, start+len) replaced by `middle` (must match endpoints).
  /// An empty result keeps this path's source as its vertex.
  Path replaced(std::size_t start, std::size_t len, const Path& middle) const;

  std::string to_string(const Quiver& q) const;
  std::vector<std::string> labels(const Quiver& q) const;

  /// Canonical order: length, then arrow ids lexicographically, then source.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
  friend bool operator==(const Path& a, const Path& b) = default;

 private:
  Path(std::vector<int> arrows, int source, int target)
      : arrows_(std::move(arrows)), source_(source), target_(target) {}

  std::vector<int> arrows_;
  int source_ = 0;
  int target_ = 0;
};

std::optional<Path> compose(const Quiver& q, const Path& p, const Path& r);

/// Start indices of every occurrence of s in p, ascending.
std::vector<std::size_t> occurrences(const Path& p, const Path& s);
bool occurs_at(const Path& p, const Path& s, std::size_t start);

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept;
};

}  // namespace qd
