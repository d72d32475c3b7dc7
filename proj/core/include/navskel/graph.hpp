#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace navskel {

using NodeId = std::uint32_t;

/// Unordered node pair stored with `u < v`.
struct Link {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Link&, const Link&) = default;
  friend auto operator<=>(const Link&, const Link&) = default;
};

/// Returns the link {a, b} in canonical (min, max) form.
constexpr Link make_link(NodeId a, NodeId b) noexcept {
  return a < b ? Link{a, b} : Link{b, a};
}

/// Undirected simple graph over dense node indices 0..N-1.
///
/// Immutable after construction. Adjacency is stored in compressed form with
/// each neighbor list sorted ascending, so every traversal visits nodes in a
/// deterministic order. Links are kept sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from a link list. Links may be given in either
  /// orientation. Throws ValidationError on self-loops, duplicate links,
  /// out-of-range endpoints, or a label vector whose size is not 0 or N.
  static Graph from_links(std::size_t node_count, std::vector<Link> links,
                          std::vector<std::string> labels = {});

  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  std::size_t link_count() const noexcept { return links_.size(); }

  std::span<const Link> links() const noexcept { return links_; }
  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::vector<std::size_t> degrees() const;

  bool has_link(NodeId a, NodeId b) const noexcept;

  /// External label of `v`; the decimal index when the graph is unlabeled.
  std::string label(NodeId v) const;
  bool has_labels() const noexcept { return !labels_.empty(); }
  std::span<const std::string> labels() const noexcept { return labels_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_ = std::vector<std::size_t>(1, 0);
  std::vector<NodeId> targets_;
  std::vector<Link> links_;
  std::vector<std::string> labels_;
};

/// Assignment of every node to one of `group_count()` non-empty groups with
/// dense indices.
class Partition {
 public:
  Partition() = default;

  /// Throws ValidationError when group indices are not dense or a group in
  /// 0..max is empty.
  static Partition from_assignment(std::vector<std::uint32_t> assignment);

  std::size_t size() const noexcept { return assignment_.size(); }
  std::size_t group_count() const noexcept { return group_count_; }
  std::uint32_t group_of(NodeId v) const noexcept { return assignment_[v]; }
  std::span<const std::uint32_t> assignment() const noexcept { return assignment_; }

 private:
  std::vector<std::uint32_t> assignment_;
  std::size_t group_count_ = 0;
};

struct Components {
  std::size_t count = 0;
  std::vector<std::uint32_t> labels;
};

/// Component labels are numbered in order of their smallest node.
Components connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Throws ConnectivityError naming two mutually unreachable nodes when `g`
/// has more than one component.
void require_connected(const Graph& g);

/// L - N + P.
std::int64_t cyclomatic_number(const Graph& g);

/// Graph of groups: A and B are linked iff some link of `g` crosses A-B.
/// Intra-group links vanish and parallel cross links collapse into one.
Graph quotient_graph(const Graph& g, const Partition& p);

}  // namespace navskel
