#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "navskel/graph.hpp"

namespace navskel {

/// Order in which links are offered to the contraction pass, as indices into
/// `Graph::links()`.
using LinkOrder = std::vector<std::size_t>;

enum class OrderingKind { kRandom, kDegreeSum };

struct ContractionStrategy {
  OrderingKind kind = OrderingKind::kRandom;
  std::uint64_t seed = 42;
};

/// Uniformly random permutation of all links, fixed by `seed`.
LinkOrder order_links_random(const Graph& g, std::uint64_t seed);

/// Links by ascending k_a + k_b over the degrees of `g`, ties broken by
/// (smaller endpoint, larger endpoint).
LinkOrder order_links_degree(const Graph& g);

LinkOrder order_links(const Graph& g, const ContractionStrategy& strategy);

/// A group of original nodes joined by a spanning tree of original links.
struct SuperNode {
  std::vector<NodeId> members;      ///< ascending
  std::vector<Link> internal_links; ///< ascending; |members| - 1 of them
};

struct SimplifiedNetwork {
  /// Simple graph over super-node indices. Labels are the label of each
  /// super-node's smallest member.
  Graph skeleton;
  /// Indexed like skeleton nodes, ordered by smallest member.
  std::vector<SuperNode> supernodes;
  /// Original node -> super-node index.
  std::vector<std::uint32_t> membership;
  /// Seed of the random ordering used, if any.
  std::optional<std::uint64_t> ordering_seed;
};

/// Single pass over `order`. A link is contracted when its endpoints sit in
/// different super-nodes that have no common neighbor in the current
/// skeleton; otherwise it is skipped for good.
///
/// Throws ConnectivityError for a disconnected graph and ArgumentError when
/// `order` is not a permutation of the link indices.
SimplifiedNetwork tree_contract(const Graph& g, std::span<const std::size_t> order);

struct SimplifiedSearchInfo {
  double h_skeleton = 0.0;
  /// Per super-node, computed on its internal tree alone.
  std::vector<double> h_supernodes;
  double h_supernodes_total = 0.0;
  double h_simp = 0.0;
};

SimplifiedSearchInfo simplified_search_information(const SimplifiedNetwork& s);

/// The tree of one super-node as a standalone graph, members relabeled
/// 0..m-1 in ascending order and carrying the original labels.
Graph supernode_tree(const Graph& original, const SuperNode& node);

struct ContractionSample {
  std::size_t trial = 0;
  std::size_t skeleton_nodes = 0;
  double h_skeleton = 0.0;
  double h_supernodes = 0.0;
  double h_simp = 0.0;
};

struct ContractionResult {
  SimplifiedNetwork network;
  SimplifiedSearchInfo info;
  std::size_t trial_index = 0;
};

struct MinimizeResult {
  ContractionResult best;
  ContractionResult worst;
  std::vector<ContractionSample> samples;
};

/// Seed of trial `trial` under master seed `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) noexcept;

/// Runs `trials` random-order contractions and keeps the least and the
/// largest H_simp (ties go to the lowest trial index). Reproducible for a
/// fixed (g, trials, seed) regardless of `threads` (0 = hardware).
MinimizeResult minimize_h_simp(const Graph& g, std::size_t trials, std::uint64_t seed,
                               unsigned threads = 0);

}  // namespace navskel
