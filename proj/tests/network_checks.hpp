#pragma once

#include <map>
#include <string>

#include <fmt/format.h>

#include "navskel/contraction.hpp"
#include "oracles.hpp"

namespace navskel::checks {

/// Empty when `s` is a valid simplification of `g`, otherwise the first
/// violated property.
inline std::string simplification_violation(const Graph& g, const SimplifiedNetwork& s) {
  const auto n = g.node_count();
  if (s.membership.size() != n) return "membership does not cover every node";
  if (s.skeleton.node_count() != s.supernodes.size()) return "skeleton size != super-node count";

  // Partition: each node in exactly the super-node its membership names.
  std::size_t covered = 0;
  for (std::size_t k = 0; k < s.supernodes.size(); ++k) {
    const auto& members = s.supernodes[k].members;
    if (members.empty()) return fmt::format("super-node {} is empty", k);
    for (NodeId v : members) {
      if (v >= n || s.membership[v] != k) return fmt::format("node {} misfiled in super-node {}", v, k);
    }
    covered += members.size();
  }
  if (covered != n) return fmt::format("super-nodes hold {} nodes, graph has {}", covered, n);

  // Spanning trees made of original links.
  std::size_t internal = 0;
  for (std::size_t k = 0; k < s.supernodes.size(); ++k) {
    const auto& node = s.supernodes[k];
    if (node.internal_links.size() + 1 != node.members.size()) {
      return fmt::format("super-node {} has {} members but {} tree links", k, node.members.size(),
                         node.internal_links.size());
    }
    std::map<NodeId, NodeId> local;
    for (NodeId v : node.members) local.emplace(v, static_cast<NodeId>(local.size()));
    std::vector<Link> relabeled;
    for (const auto& l : node.internal_links) {
      if (!g.has_link(l.u, l.v)) return fmt::format("tree link ({}, {}) not in graph", l.u, l.v);
      if (!local.contains(l.u) || !local.contains(l.v)) {
        return fmt::format("tree link ({}, {}) leaves super-node {}", l.u, l.v, k);
      }
      relabeled.push_back(make_link(local[l.u], local[l.v]));
    }
    if (oracle::count_components(node.members.size(), relabeled) != 1) {
      return fmt::format("super-node {} tree is disconnected", k);
    }
    internal += node.internal_links.size();
  }

  // Skeleton: simple, and exactly the image of the non-tree links.
  if (s.skeleton.link_count() + internal != g.link_count()) {
    return fmt::format("skeleton links {} + tree links {} != {}", s.skeleton.link_count(), internal,
                       g.link_count());
  }
  for (const auto& l : s.skeleton.links()) {
    if (l.u == l.v) return "skeleton self-loop";
  }
  for (const auto& l : g.links()) {
    const auto a = s.membership[l.u];
    const auto b = s.membership[l.v];
    if (a != b && !s.skeleton.has_link(a, b)) {
      return fmt::format("crossing link ({}, {}) missing from skeleton", l.u, l.v);
    }
  }

  // Cyclomatic number, computed independently of the library metrics.
  const std::vector<Link> original(g.links().begin(), g.links().end());
  const std::vector<Link> skel(s.skeleton.links().begin(), s.skeleton.links().end());
  const auto c_original = static_cast<long>(g.link_count()) - static_cast<long>(n) +
                          static_cast<long>(oracle::count_components(n, original));
  const auto c_skeleton = static_cast<long>(skel.size()) -
                          static_cast<long>(s.skeleton.node_count()) +
                          static_cast<long>(oracle::count_components(s.skeleton.node_count(), skel));
  if (c_original != c_skeleton) {
    return fmt::format("cyclomatic number {} became {}", c_original, c_skeleton);
  }
  return {};
}

}  // namespace navskel::checks
