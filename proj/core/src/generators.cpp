#include "navskel/generators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <queue>
#include <thread>
#include <unordered_set>

#include <fmt/format.h>

#include "navskel/error.hpp"
#include "navskel/random.hpp"
#include "navskel/search_info.hpp"

namespace navskel {
namespace {

std::uint64_t link_key(NodeId a, NodeId b) {
  const auto l = make_link(a, b);
  return (static_cast<std::uint64_t>(l.u) << 32) | l.v;
}

std::vector<Link> pruefer_decode(std::span<const NodeId> seq, std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (NodeId v : seq) ++degree[v];
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> leaves;
  for (NodeId v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Link> links;
  links.reserve(n - 1);
  for (NodeId v : seq) {
    const NodeId leaf = leaves.top();
    leaves.pop();
    links.push_back(make_link(leaf, v));
    if (--degree[v] == 1) leaves.push(v);
  }
  const NodeId a = leaves.top();
  leaves.pop();
  links.push_back(make_link(a, leaves.top()));
  return links;
}

// Adjacency lists that stay in sync with a swapped link set.
class MutableGraph {
 public:
  MutableGraph(std::size_t n, std::span<const Link> links) : adj_(n) {
    for (const auto& l : links) add(l.u, l.v);
  }

  void add(NodeId a, NodeId b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }

  void remove(NodeId a, NodeId b) {
    std::erase(adj_[a], b);
    std::erase(adj_[b], a);
  }

  bool connected() {
    if (adj_.empty()) return true;
    seen_.assign(adj_.size(), false);
    stack_.assign(1, 0);
    seen_[0] = true;
    std::size_t reached = 1;
    while (!stack_.empty()) {
      const NodeId u = stack_.back();
      stack_.pop_back();
      for (NodeId w : adj_[u]) {
        if (!seen_[w]) {
          seen_[w] = true;
          ++reached;
          stack_.push_back(w);
        }
      }
    }
    return reached == adj_.size();
  }

 private:
  std::vector<std::vector<NodeId>> adj_;
  std::vector<bool> seen_;
  std::vector<NodeId> stack_;
};

}  // namespace

Graph gen_ring(std::uint64_t n) {
  if (n < 3) throw ArgumentError(fmt::format("ring needs at least 3 nodes, got {}", n));
  std::vector<Link> links;
  for (NodeId i = 0; i < n; ++i) links.push_back(make_link(i, static_cast<NodeId>((i + 1) % n)));
  return Graph::from_links(n, std::move(links));
}

Graph gen_chain(std::uint64_t n) {
  if (n == 0) throw ArgumentError("chain needs at least 1 node");
  std::vector<Link> links;
  for (NodeId i = 0; i + 1 < n; ++i) links.push_back({i, i + 1});
  return Graph::from_links(n, std::move(links));
}

Graph gen_complete(std::uint64_t n) {
  if (n == 0) throw ArgumentError("complete graph needs at least 1 node");
  std::vector<Link> links;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) links.push_back({i, j});
  }
  return Graph::from_links(n, std::move(links));
}

Graph gen_random_tree(std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw ArgumentError("tree needs at least 1 node");
  if (n <= 2) return gen_chain(n);
  Rng rng(seed);
  std::vector<NodeId> seq(n - 2);
  for (auto& v : seq) v = static_cast<NodeId>(rng.below(n));
  return Graph::from_links(n, pruefer_decode(seq, n));
}

Graph gen_attachment_tree(std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw ArgumentError("tree needs at least 1 node");
  if (n <= 2) return gen_chain(n);
  Rng rng(seed);
  std::vector<Link> links{{0, 1}};
  // Each node appears once per incident link, so a uniform pick is
  // degree-proportional.
  std::vector<NodeId> ends{0, 1};
  ends.reserve(2 * n);
  for (NodeId i = 2; i < n; ++i) {
    const NodeId target = ends[rng.below(ends.size())];
    links.push_back(make_link(target, i));
    ends.push_back(target);
    ends.push_back(i);
  }
  return Graph::from_links(n, std::move(links));
}

Graph gen_connected_random(std::uint64_t n, double p, std::uint64_t seed, std::size_t max_draws) {
  if (n == 0) throw ArgumentError("random graph needs at least 1 node");
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError(fmt::format("link probability {} not in [0, 1]", p));
  for (std::size_t draw = 0; draw < max_draws; ++draw) {
    Rng rng(derive_seed(seed, draw));
    std::vector<Link> links;
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) {
        if (rng.uniform01() < p) links.push_back({i, j});
      }
    }
    auto g = Graph::from_links(n, std::move(links));
    if (is_connected(g)) return g;
  }
  throw ArgumentError(
      fmt::format("no connected G({}, {}) within {} draws; raise p", n, p, max_draws));
}

Graph gen_tree_with_chords(std::uint64_t n, std::uint64_t chords, std::uint64_t seed) {
  const auto tree = gen_random_tree(n, derive_seed(seed, 0));
  const std::uint64_t room = n * (n - 1) / 2 - tree.link_count();
  if (chords > room) {
    throw ArgumentError(fmt::format("{} chords do not fit in a {}-node tree", chords, n));
  }
  std::vector<Link> links(tree.links().begin(), tree.links().end());
  std::unordered_set<std::uint64_t> present;
  for (const auto& l : links) present.insert(link_key(l.u, l.v));
  Rng rng(derive_seed(seed, 1));
  while (links.size() < tree.link_count() + chords) {
    const auto a = static_cast<NodeId>(rng.below(n));
    const auto b = static_cast<NodeId>(rng.below(n));
    if (a == b || !present.insert(link_key(a, b)).second) continue;
    links.push_back(make_link(a, b));
  }
  return Graph::from_links(n, std::move(links));
}

Graph rewire_degree_preserving(const Graph& g, std::uint64_t swap_attempts, std::uint64_t seed) {
  require_connected(g);
  if (g.link_count() < 2) {
    throw ArgumentError(fmt::format("rewiring needs at least 2 links, got {}", g.link_count()));
  }
  std::vector<Link> links(g.links().begin(), g.links().end());
  std::unordered_set<std::uint64_t> present;
  for (const auto& l : links) present.insert(link_key(l.u, l.v));
  MutableGraph work(g.node_count(), links);

  Rng rng(seed);
  for (std::uint64_t attempt = 0; attempt < swap_attempts; ++attempt) {
    const auto i = rng.below(links.size());
    auto j = rng.below(links.size() - 1);
    if (j >= i) ++j;
    const auto [a, b] = links[i];
    auto [c, d] = links[j];
    if (rng.below(2) == 1) std::swap(c, d);
    // {a,b},{c,d} -> {a,c},{b,d}
    if (a == c || b == d) continue;
    if (present.contains(link_key(a, c)) || present.contains(link_key(b, d))) continue;

    work.remove(a, b);
    work.remove(c, d);
    work.add(a, c);
    work.add(b, d);
    if (!work.connected()) {
      work.remove(a, c);
      work.remove(b, d);
      work.add(a, b);
      work.add(c, d);
      continue;
    }
    present.erase(link_key(a, b));
    present.erase(link_key(c, d));
    present.insert(link_key(a, c));
    present.insert(link_key(b, d));
    links[i] = make_link(a, c);
    links[j] = make_link(b, d);
  }
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  return Graph::from_links(g.node_count(), std::move(links), std::move(labels));
}

TreeScalingResult tree_scaling_experiment(const TreeScalingConfig& config) {
  if (config.n_min < 2 || config.n_min > config.n_max) {
    throw ArgumentError(fmt::format("need 2 <= n_min <= n_max, got n_min={} n_max={}",
                                    config.n_min, config.n_max));
  }
  if (config.step == 0) throw ArgumentError("step must be positive");
  if (config.samples == 0) throw ArgumentError("samples must be positive");

  std::vector<std::uint64_t> sizes;
  for (auto n = config.n_min; n <= config.n_max; n += config.step) sizes.push_back(n);

  const auto per_size = config.samples;
  const std::size_t jobs = sizes.size() * per_size;
  std::vector<double> bits(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job; (job = next.fetch_add(1)) < jobs;) {
      const auto n = sizes[job / per_size];
      const auto sample_seed = derive_seed(derive_seed(config.seed, n), job % per_size);
      const auto tree = config.ensemble == TreeEnsemble::kUniform
                            ? gen_random_tree(n, sample_seed)
                            : gen_attachment_tree(n, sample_seed);
      bits[job] = total_search_information(tree);
    }
  };
  unsigned threads =
      config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  TreeScalingResult result;
  std::vector<PowerLawPoint> points;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const auto first = bits.begin() + static_cast<std::ptrdiff_t>(k * per_size);
    const auto last = first + static_cast<std::ptrdiff_t>(per_size);
    TreeScalingRow row;
    row.n = sizes[k];
    row.samples = per_size;
    double sum = 0.0;
    for (auto it = first; it != last; ++it) sum += *it;
    row.mean_bits = sum / static_cast<double>(per_size);
    double sq = 0.0;
    for (auto it = first; it != last; ++it) sq += (*it - row.mean_bits) * (*it - row.mean_bits);
    row.std_bits = std::sqrt(sq / static_cast<double>(per_size));
    result.rows.push_back(row);
    if (row.mean_bits > 0.0) points.push_back({static_cast<double>(row.n), row.mean_bits});
  }
  if (points.size() >= 3) {
    result.fit = fit_power_law(points);
    result.has_fit = true;
  }
  return result;
}

}  // namespace navskel
