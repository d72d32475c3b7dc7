#include "navskel/contraction.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>
#include <unordered_set>

#include <fmt/format.h>

#include "navskel/error.hpp"
#include "navskel/random.hpp"
#include "navskel/search_info.hpp"

namespace navskel {
namespace {

// Union-find over original nodes. Each root owns the neighbor set of its
// super-node in the current skeleton, keyed by neighboring roots.
class ContractionState {
 public:
  explicit ContractionState(const Graph& g) : parent_(g.node_count()), adj_(g.node_count()) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
    for (NodeId v = 0; v < g.node_count(); ++v) {
      auto nbrs = g.neighbors(v);
      adj_[v].insert(nbrs.begin(), nbrs.end());
    }
  }

  NodeId find(NodeId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // Contracts the skeleton link between roots a and b unless it would turn
  // a shared neighbor's two links into a multilink.
  bool try_merge(NodeId a, NodeId b) {
    if (adj_[a].size() < adj_[b].size()) std::swap(a, b);
    // a keeps the larger neighbor set; probe with the smaller one.
    for (NodeId x : adj_[b]) {
      if (x != a && adj_[a].contains(x)) return false;
    }
    parent_[b] = a;
    adj_[a].erase(b);
    adj_[b].erase(a);
    for (NodeId x : adj_[b]) {
      auto& nx = adj_[x];
      nx.erase(b);
      nx.insert(a);
      adj_[a].insert(x);
    }
    adj_[b] = {};
    return true;
  }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::unordered_set<NodeId>> adj_;
};

void check_permutation(std::span<const std::size_t> order, std::size_t link_count) {
  if (order.size() != link_count) {
    throw ArgumentError(
        fmt::format("ordering has {} entries but the graph has {} links", order.size(), link_count));
  }
  std::vector<bool> seen(link_count, false);
  for (auto idx : order) {
    if (idx >= link_count || seen[idx]) {
      throw ArgumentError(fmt::format("ordering is not a permutation (entry {})", idx));
    }
    seen[idx] = true;
  }
}

SimplifiedNetwork assemble(const Graph& g, ContractionState& state,
                           const std::vector<std::size_t>& accepted) {
  const auto n = g.node_count();
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  SimplifiedNetwork out;
  out.membership.assign(n, kUnset);

  std::vector<std::uint32_t> root_index(n, kUnset);
  std::vector<std::string> labels;
  for (NodeId v = 0; v < n; ++v) {
    const NodeId r = state.find(v);
    if (root_index[r] == kUnset) {
      root_index[r] = static_cast<std::uint32_t>(out.supernodes.size());
      out.supernodes.emplace_back();
      labels.push_back(g.label(v));
    }
    out.membership[v] = root_index[r];
    out.supernodes[root_index[r]].members.push_back(v);
  }

  std::vector<bool> internal(g.link_count(), false);
  for (auto idx : accepted) internal[idx] = true;

  std::vector<Link> skeleton_links;
  const auto links = g.links();
  for (std::size_t i = 0; i < links.size(); ++i) {
    const auto& link = links[i];
    if (internal[i]) {
      out.supernodes[out.membership[link.u]].internal_links.push_back(link);
    } else {
      skeleton_links.push_back(make_link(out.membership[link.u], out.membership[link.v]));
    }
  }
  out.skeleton = Graph::from_links(out.supernodes.size(), std::move(skeleton_links),
                                   std::move(labels));
  return out;
}

// Internal tree links renumbered to positions within the sorted member list.
std::vector<Link> local_links(const SuperNode& node) {
  const auto& m = node.members;
  auto local = [&](NodeId v) {
    return static_cast<NodeId>(std::lower_bound(m.begin(), m.end(), v) - m.begin());
  };
  std::vector<Link> links;
  links.reserve(node.internal_links.size());
  for (const auto& link : node.internal_links) links.push_back(make_link(local(link.u), local(link.v)));
  return links;
}

}  // namespace

LinkOrder order_links_random(const Graph& g, std::uint64_t seed) {
  LinkOrder order(g.link_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(order));
  return order;
}

LinkOrder order_links_degree(const Graph& g) {
  LinkOrder order(g.link_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto links = g.links();
  auto weight = [&](std::size_t i) { return g.degree(links[i].u) + g.degree(links[i].v); };
  // Links are stored sorted by (u, v), so a stable sort by weight alone
  // yields the endpoint tie-break.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weight(a) < weight(b); });
  return order;
}

LinkOrder order_links(const Graph& g, const ContractionStrategy& strategy) {
  switch (strategy.kind) {
    case OrderingKind::kRandom:
      return order_links_random(g, strategy.seed);
    case OrderingKind::kDegreeSum:
      return order_links_degree(g);
  }
  throw ArgumentError("unknown ordering kind");
}

SimplifiedNetwork tree_contract(const Graph& g, std::span<const std::size_t> order) {
  require_connected(g);
  check_permutation(order, g.link_count());

  ContractionState state(g);
  std::vector<std::size_t> accepted;
  const auto links = g.links();
  for (auto idx : order) {
    const NodeId a = state.find(links[idx].u);
    const NodeId b = state.find(links[idx].v);
    if (a == b) continue;
    if (state.try_merge(a, b)) accepted.push_back(idx);
  }
  return assemble(g, state, accepted);
}

Graph supernode_tree(const Graph& original, const SuperNode& node) {
  std::vector<std::string> labels;
  labels.reserve(node.members.size());
  for (NodeId v : node.members) labels.push_back(original.label(v));
  return Graph::from_links(node.members.size(), local_links(node), std::move(labels));
}

SimplifiedSearchInfo simplified_search_information(const SimplifiedNetwork& s) {
  SimplifiedSearchInfo info;
  info.h_skeleton = total_search_information(s.skeleton);
  info.h_supernodes.reserve(s.supernodes.size());
  for (const auto& node : s.supernodes) {
    // Trees of one or two nodes carry no routing decisions.
    double h = 0.0;
    if (node.members.size() > 2) {
      h = total_search_information(Graph::from_links(node.members.size(), local_links(node)));
    }
    info.h_supernodes.push_back(h);
    info.h_supernodes_total += h;
  }
  info.h_simp = info.h_skeleton + info.h_supernodes_total;
  return info;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) noexcept {
  return derive_seed(seed, trial);
}

MinimizeResult minimize_h_simp(const Graph& g, std::size_t trials, std::uint64_t seed,
                               unsigned threads) {
  if (trials == 0) throw ArgumentError("trials must be positive");
  require_connected(g);

  auto run_trial = [&](std::size_t t) {
    const auto s = trial_seed(seed, t);
    ContractionResult r;
    r.network = tree_contract(g, order_links_random(g, s));
    r.network.ordering_seed = s;
    r.info = simplified_search_information(r.network);
    r.trial_index = t;
    return r;
  };

  MinimizeResult out;
  out.samples.resize(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < trials;) {
      const auto r = run_trial(t);
      out.samples[t] = ContractionSample{t, r.network.skeleton.node_count(), r.info.h_skeleton,
                                         r.info.h_supernodes_total, r.info.h_simp};
    }
  };
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, trials));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }

  std::size_t best = 0;
  std::size_t worst = 0;
  for (std::size_t t = 1; t < trials; ++t) {
    if (out.samples[t].h_simp < out.samples[best].h_simp) best = t;
    if (out.samples[t].h_simp > out.samples[worst].h_simp) worst = t;
  }
  // Only the two extremes are kept; rebuild them from their seeds.
  out.best = run_trial(best);
  out.worst = run_trial(worst);
  return out;
}

}  // namespace navskel
