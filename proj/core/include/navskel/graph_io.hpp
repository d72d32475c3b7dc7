#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "navskel/graph.hpp"

namespace navskel {

/// Reads a whitespace-separated edge list ("LABEL LABEL" per line). Lines
/// whose first non-blank character is '#' and blank lines are skipped.
/// Labels get dense indices in order of first appearance.
///
/// Throws ParseError for lines without exactly two tokens, ValidationError for
/// self-loops and repeated links (in either orientation).
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// Writes one "LABEL LABEL" line per link. Isolated nodes cannot be
/// represented and are dropped.
void write_edge_list(const Graph& g, std::ostream& out);

/// Reads "LABEL GROUP" lines. Every node of `g` must appear exactly once.
/// Group values may be any non-negative integers; they are compacted to
/// 0..k-1 preserving their numeric order.
Partition load_partition(std::istream& in, const Graph& g);
Partition load_partition_file(const std::string& path, const Graph& g);

/// Graphviz DOT for an undirected graph. With `node_weights`, each vertex gets
/// `width`/`height` proportional to its weight relative to the largest one.
std::string to_dot(const Graph& g,
                   std::optional<std::span<const std::uint64_t>> node_weights = std::nullopt);

}  // namespace navskel
