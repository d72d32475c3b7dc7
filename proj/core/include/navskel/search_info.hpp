#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "navskel/graph.hpp"

namespace navskel {

/// All shortest paths out of one source, as a DAG directed away from it.
///
/// `order` lists reachable nodes by nondecreasing distance (BFS order), which
/// is a topological order of the DAG. Predecessors of `v` are the neighbors
/// one hop closer to the source, in ascending index order.
struct ShortestPathDag {
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  NodeId source = 0;
  std::vector<std::uint32_t> dist;
  std::vector<NodeId> order;
  std::vector<std::size_t> pred_offsets;
  std::vector<NodeId> pred_targets;

  bool reachable(NodeId v) const noexcept { return dist[v] != kUnreachable; }
  std::span<const NodeId> predecessors(NodeId v) const noexcept {
    return {pred_targets.data() + pred_offsets[v], pred_targets.data() + pred_offsets[v + 1]};
  }
};

/// Throws ArgumentError if `source` is not a node of `g`.
ShortestPathDag shortest_path_dag(const Graph& g, NodeId source);

struct SearchInfoOptions {
  /// Arrival probabilities below this switch to log-space accumulation.
  double underflow_threshold = 1e-300;
  /// Keep the N x N matrix of H(s -> d) in the report.
  bool keep_pairs = false;
  /// Worker threads over sources; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Search information of an entire network, in bits.
struct SearchInfoReport {
  std::size_t node_count = 0;
  std::size_t link_count = 0;
  /// Row-major H(s -> d), present when requested. Diagonal is zero.
  std::optional<std::vector<double>> pair_bits;
  /// Sum over destinations of H(s -> d), per source.
  std::vector<double> per_source_bits;
  double total_bits = 0.0;
  /// total / N^2; the N zero-valued s == d terms stay in the denominator.
  double average_bits = 0.0;

  double pair(NodeId s, NodeId d) const { return (*pair_bits)[s * node_count + d]; }
};

/// H(s -> d) for every destination d from a single source. Entries for
/// unreachable destinations are +infinity; H(s -> s) = 0.
std::vector<double> source_search_information(const Graph& g, NodeId source,
                                              double underflow_threshold = 1e-300);

/// H(s -> d) = -log2 of the probability that a walker which never steps
/// straight back follows some shortest path from s to d. Zero when s == d.
/// Throws UnreachableError when d cannot be reached from s.
double pair_search_information(const Graph& g, NodeId s, NodeId d,
                               double underflow_threshold = 1e-300);

/// Sums H(s -> d) over all ordered pairs. Throws ConnectivityError when `g`
/// is disconnected. The reduction runs in fixed source order, so the result
/// does not depend on the thread count.
SearchInfoReport search_information(const Graph& g, const SearchInfoOptions& options = {});

double total_search_information(const Graph& g);

/// Closed form for a chain of n nodes: (n - 2)(n - 1), or 0 for n <= 2.
/// Throws ArgumentError for n = 0.
double chain_search_information(std::uint64_t n);

struct RingSplit {
  double bits = 0.0;
  /// Super-node sizes, largest first, differing by at most one.
  std::array<std::uint64_t, 3> parts{};
};

/// Least H_simp over all tree-contractions of an n-node ring: triangle
/// skeleton (6 bits) plus three chains as even as possible.
/// Throws ArgumentError for n < 3.
RingSplit ring_min_simplified_h(std::uint64_t n);

}  // namespace navskel
