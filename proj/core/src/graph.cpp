#include "navskel/graph.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "navskel/error.hpp"

namespace navskel {

Graph Graph::from_links(std::size_t node_count, std::vector<Link> links,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != node_count) {
    throw ValidationError(
        fmt::format("{} labels given for {} nodes", labels.size(), node_count));
  }
  for (auto& link : links) {
    if (link.u >= node_count || link.v >= node_count) {
      throw ValidationError(fmt::format("link ({}, {}) references a node outside 0..{}",
                                        link.u, link.v, node_count));
    }
    if (link.u == link.v) {
      throw ValidationError(fmt::format("self-loop on node {}", link.u));
    }
    link = make_link(link.u, link.v);
  }
  std::sort(links.begin(), links.end());
  if (auto dup = std::adjacent_find(links.begin(), links.end()); dup != links.end()) {
    throw ValidationError(fmt::format("duplicate link ({}, {})", dup->u, dup->v));
  }

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (const auto& link : links) {
    ++g.offsets_[link.u + 1];
    ++g.offsets_[link.v + 1];
  }
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];

  g.targets_.resize(2 * links.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& link : links) {
    g.targets_[cursor[link.u]++] = link.v;
    g.targets_[cursor[link.v]++] = link.u;
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  g.links_ = std::move(links);
  g.labels_ = std::move(labels);
  return g;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(node_count());
  for (NodeId v = 0; v < out.size(); ++v) out[v] = degree(v);
  return out;
}

bool Graph::has_link(NodeId a, NodeId b) const noexcept {
  if (a >= node_count() || b >= node_count()) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nbrs = neighbors(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::string Graph::label(NodeId v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Partition Partition::from_assignment(std::vector<std::uint32_t> assignment) {
  Partition p;
  if (assignment.empty()) return p;
  const auto max_group = *std::max_element(assignment.begin(), assignment.end());
  std::vector<bool> seen(static_cast<std::size_t>(max_group) + 1, false);
  for (auto group : assignment) seen[group] = true;
  if (auto gap = std::find(seen.begin(), seen.end(), false); gap != seen.end()) {
    throw ValidationError(fmt::format("partition group {} is empty; group indices must be dense",
                                      gap - seen.begin()));
  }
  p.group_count_ = seen.size();
  p.assignment_ = std::move(assignment);
  return p;
}

}  // namespace navskel
