#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "navskel/contraction.hpp"
#include "navskel/estimator.hpp"
#include "navskel/generators.hpp"
#include "navskel/graph.hpp"
#include "navskel/search_info.hpp"

// Text renderings of results. Keys come out in a fixed order and every real
// number is rounded to 6 significant digits, so equal inputs give
// byte-identical documents.
namespace navskel::report {

/// `value` rounded to 6 significant digits ("%.6g").
std::string format_real(double value);
double round6(double value);

struct GraphSummary {
  std::size_t nodes = 0;
  std::size_t links = 0;
  std::size_t components = 0;
  std::int64_t cyclomatic = 0;
};

GraphSummary summarize(const Graph& g);

/// {n, l, components, cyclomatic[, partition{groups, n, l, components, cyclomatic}]}
std::string info_json(const GraphSummary& graph, const std::optional<GraphSummary>& quotient);
std::string info_csv(const GraphSummary& graph, const std::optional<GraphSummary>& quotient);

/// {n, l, total_bits, average_bits, per_source_bits[, pair_bits]}
std::string search_info_json(const SearchInfoReport& r);
/// "source_label,bits"
std::string per_source_csv(const Graph& g, const SearchInfoReport& r);
/// "source_label,dest_label,bits", s != d. Requires pair_bits.
std::string pair_matrix_csv(const Graph& g, const SearchInfoReport& r);

/// {skeleton_edges, supernode_members, h_skeleton, h_supernodes, h_simp, trial_index}
std::string simplification_json(const Graph& original, const ContractionResult& r);
/// "label,supernode"
std::string membership_csv(const Graph& original, const SimplifiedNetwork& s);
/// Skeleton with vertex size proportional to super-node member count.
std::string skeleton_dot(const SimplifiedNetwork& s);

/// {n, l, trials, seed, best, worst}; best/worst as in simplification_json.
std::string minimize_json(const Graph& original, const MinimizeResult& r, std::size_t trials,
                          std::uint64_t seed);
/// "trial,skeleton_nodes,h_skeleton,h_supernodes,h_simp"
std::string samples_csv(std::span<const ContractionSample> samples);

/// {amplitude, exponent, r_squared, n_points}
std::string fit_json(const PowerLawFit& fit);
/// {h_skeleton, ratio, estimate_bits, low_confidence}
std::string estimate_json(const SkeletonEstimate& e);
std::string estimate_csv(const SkeletonEstimate& e);

/// "n,mean_bits,std_bits,samples"
std::string tree_scaling_csv(std::span<const TreeScalingRow> rows);
/// {rows: [...], fit: {...} | null}
std::string tree_scaling_json(const TreeScalingResult& r);

/// Edge list as JSON: {n, l, edges: [[a, b], ...]}.
std::string edges_json(const Graph& g);

}  // namespace navskel::report
