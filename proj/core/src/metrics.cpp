#include <algorithm>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "navskel/error.hpp"
#include "navskel/graph.hpp"

namespace navskel {

Components connected_components(const Graph& g) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  Components out;
  out.labels.assign(g.node_count(), kUnset);
  std::vector<NodeId> stack;
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (out.labels[root] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.count++);
    out.labels[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(u)) {
        if (out.labels[w] == kUnset) {
          out.labels[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

void require_connected(const Graph& g) {
  const auto comps = connected_components(g);
  if (comps.count <= 1) return;
  // Node 0 is in component 0; find the first node elsewhere.
  const auto other = static_cast<NodeId>(
      std::find_if(comps.labels.begin(), comps.labels.end(), [](auto c) { return c != 0; }) -
      comps.labels.begin());
  throw ConnectivityError(
      0, other,
      fmt::format("graph has {} connected components; no path between '{}' and '{}'",
                  comps.count, g.label(0), g.label(other)));
}

std::int64_t cyclomatic_number(const Graph& g) {
  const auto components = connected_components(g).count;
  return static_cast<std::int64_t>(g.link_count()) - static_cast<std::int64_t>(g.node_count()) +
         static_cast<std::int64_t>(components);
}

Graph quotient_graph(const Graph& g, const Partition& p) {
  if (p.size() != g.node_count()) {
    throw ValidationError(fmt::format("partition covers {} nodes but graph has {}", p.size(),
                                      g.node_count()));
  }
  std::vector<Link> cross;
  cross.reserve(g.link_count());
  for (const auto& link : g.links()) {
    const auto a = p.group_of(link.u);
    const auto b = p.group_of(link.v);
    if (a != b) cross.push_back(make_link(a, b));
  }
  std::sort(cross.begin(), cross.end());
  cross.erase(std::unique(cross.begin(), cross.end()), cross.end());
  return Graph::from_links(p.group_count(), std::move(cross));
}

}  // namespace navskel
