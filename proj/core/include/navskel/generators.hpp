#pragma once

#include <cstdint>
#include <vector>

#include "navskel/estimator.hpp"
#include "navskel/graph.hpp"

namespace navskel {

/// Cycle 0-1-...-(n-1)-0. Throws ArgumentError for n < 3.
Graph gen_ring(std::uint64_t n);

/// Path 0-1-...-(n-1). Throws ArgumentError for n = 0.
Graph gen_chain(std::uint64_t n);

/// K_n. Throws ArgumentError for n = 0.
Graph gen_complete(std::uint64_t n);

/// Uniformly distributed labeled tree on n nodes, decoded from a random
/// Pruefer sequence. Throws ArgumentError for n = 0.
Graph gen_random_tree(std::uint64_t n, std::uint64_t seed);

/// Linear preferential-attachment tree: node i > 1 joins an existing node
/// chosen with probability proportional to its degree. Throws ArgumentError
/// for n = 0.
Graph gen_attachment_tree(std::uint64_t n, std::uint64_t seed);

/// G(n, p) conditioned on being connected, by redrawing. Throws
/// ArgumentError when no connected draw appears within `max_draws`.
Graph gen_connected_random(std::uint64_t n, double p, std::uint64_t seed,
                           std::size_t max_draws = 1000);

/// Uniform random tree on n nodes plus `chords` extra random links.
Graph gen_tree_with_chords(std::uint64_t n, std::uint64_t chords, std::uint64_t seed);

/// Double-edge swaps {a,b},{c,d} -> {a,c},{b,d} or {a,d},{b,c}. A swap that
/// would add a self-loop or a multilink, or that disconnects the graph, is
/// undone. Degrees and connectivity of the input are kept.
///
/// Throws ConnectivityError for a disconnected input and ArgumentError when
/// L < 2.
Graph rewire_degree_preserving(const Graph& g, std::uint64_t swap_attempts, std::uint64_t seed);

enum class TreeEnsemble { kUniform, kAttachment };

struct TreeScalingRow {
  std::uint64_t n = 0;
  double mean_bits = 0.0;
  /// Population standard deviation; 0 for a single sample.
  double std_bits = 0.0;
  std::uint64_t samples = 0;
};

struct TreeScalingConfig {
  std::uint64_t n_min = 10;
  std::uint64_t n_max = 100;
  std::uint64_t step = 10;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 42;
  TreeEnsemble ensemble = TreeEnsemble::kAttachment;
  unsigned threads = 0;
};

struct TreeScalingResult {
  std::vector<TreeScalingRow> rows;
  /// Power law over (n, mean_bits); needs at least 3 rows with positive mean.
  PowerLawFit fit;
  bool has_fit = false;
};

/// Mean total search information of random trees for each n in
/// n_min, n_min + step, ..., <= n_max. Per-sample seeds are derived from
/// (seed, n, sample), so results do not depend on `threads`.
TreeScalingResult tree_scaling_experiment(const TreeScalingConfig& config);

}  // namespace navskel
