#include "navskel/search_info.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <fmt/format.h>

#include "navskel/error.hpp"

namespace navskel {
namespace {

constexpr std::uint32_t kUnreachable = ShortestPathDag::kUnreachable;

// Arrival probability of the walker at a node. Kept as a plain double until a
// contribution would fall below the underflow threshold, then as log2.
struct Arrival {
  double linear = 0.0;
  double log2p = 0.0;
  bool in_log = false;

  double as_log2() const { return in_log ? log2p : std::log2(linear); }
};

// Reusable per-thread buffers for one source at a time.
class SourceSweep {
 public:
  explicit SourceSweep(const Graph& g) : g_(g), dist_(g.node_count()), arrival_(g.node_count()) {
    order_.reserve(g.node_count());
  }

  // Fills `bits` (size N) with H(source -> d); +inf where unreachable.
  void run(NodeId source, double threshold, std::span<double> bits) {
    bfs(source);
    std::fill(bits.begin(), bits.end(), std::numeric_limits<double>::infinity());
    bits[source] = 0.0;
    const double ks = static_cast<double>(g_.degree(source));

    for (std::size_t i = 1; i < order_.size(); ++i) {
      const NodeId v = order_[i];
      auto& a = arrival_[v];
      if (dist_[v] == 1) {
        a = Arrival{1.0 / ks, 0.0, false};
      } else {
        a = merge_predecessors(v, threshold);
      }
      bits[v] = -a.as_log2();
    }
  }

 private:
  void bfs(NodeId source) {
    std::fill(dist_.begin(), dist_.end(), kUnreachable);
    order_.clear();
    dist_[source] = 0;
    order_.push_back(source);
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const NodeId u = order_[head];
      for (NodeId w : g_.neighbors(u)) {
        if (dist_[w] == kUnreachable) {
          dist_[w] = dist_[u] + 1;
          order_.push_back(w);
        }
      }
    }
  }

  // A(v) = sum over predecessors u of A(u) / (k_u - 1). Every predecessor at
  // distance >= 1 has degree >= 2, so the divisor is never zero.
  Arrival merge_predecessors(NodeId v, double threshold) {
    const std::uint32_t want = dist_[v] - 1;
    bool need_log = false;
    double sum = 0.0;
    for (NodeId u : g_.neighbors(v)) {
      if (dist_[u] != want) continue;
      const auto& au = arrival_[u];
      if (au.in_log) {
        need_log = true;
        break;
      }
      const double c = au.linear / static_cast<double>(g_.degree(u) - 1);
      if (c < threshold) {
        need_log = true;
        break;
      }
      sum += c;
    }
    if (!need_log) return Arrival{sum, 0.0, false};

    // log2-sum-exp2 over the same contributions.
    terms_.clear();
    for (NodeId u : g_.neighbors(v)) {
      if (dist_[u] != want) continue;
      terms_.push_back(arrival_[u].as_log2() - std::log2(static_cast<double>(g_.degree(u) - 1)));
    }
    const double peak = *std::max_element(terms_.begin(), terms_.end());
    double acc = 0.0;
    for (double t : terms_) acc += std::exp2(t - peak);
    return Arrival{0.0, peak + std::log2(acc), true};
  }

  const Graph& g_;
  std::vector<std::uint32_t> dist_;
  std::vector<NodeId> order_;
  std::vector<Arrival> arrival_;
  std::vector<double> terms_;
};

void check_node(const Graph& g, NodeId v, const char* what) {
  if (v >= g.node_count()) {
    throw ArgumentError(
        fmt::format("{} index {} out of range for {} nodes", what, v, g.node_count()));
  }
}

unsigned resolve_threads(unsigned requested, std::size_t work) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

}  // namespace

ShortestPathDag shortest_path_dag(const Graph& g, NodeId source) {
  check_node(g, source, "source");
  const auto n = g.node_count();
  ShortestPathDag dag;
  dag.source = source;
  dag.dist.assign(n, kUnreachable);
  dag.dist[source] = 0;
  dag.order.push_back(source);
  for (std::size_t head = 0; head < dag.order.size(); ++head) {
    const NodeId u = dag.order[head];
    for (NodeId w : g.neighbors(u)) {
      if (dag.dist[w] == kUnreachable) {
        dag.dist[w] = dag.dist[u] + 1;
        dag.order.push_back(w);
      }
    }
  }
  dag.pred_offsets.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    dag.pred_offsets[v + 1] = dag.pred_offsets[v];
    if (dag.dist[v] == kUnreachable || v == source) continue;
    for (NodeId u : g.neighbors(v)) {
      if (dag.dist[u] + 1 == dag.dist[v]) {
        dag.pred_targets.push_back(u);
        ++dag.pred_offsets[v + 1];
      }
    }
  }
  return dag;
}

std::vector<double> source_search_information(const Graph& g, NodeId source,
                                              double underflow_threshold) {
  check_node(g, source, "source");
  std::vector<double> bits(g.node_count());
  SourceSweep sweep(g);
  sweep.run(source, underflow_threshold, bits);
  return bits;
}

double pair_search_information(const Graph& g, NodeId s, NodeId d, double underflow_threshold) {
  check_node(g, s, "source");
  check_node(g, d, "destination");
  if (s == d) return 0.0;
  const auto bits = source_search_information(g, s, underflow_threshold);
  if (std::isinf(bits[d])) {
    throw UnreachableError(
        fmt::format("'{}' is not reachable from '{}'", g.label(d), g.label(s)));
  }
  return bits[d];
}

SearchInfoReport search_information(const Graph& g, const SearchInfoOptions& options) {
  require_connected(g);
  const auto n = g.node_count();

  SearchInfoReport report;
  report.node_count = n;
  report.link_count = g.link_count();
  report.per_source_bits.assign(n, 0.0);
  if (options.keep_pairs) report.pair_bits.emplace(n * n, 0.0);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    SourceSweep sweep(g);
    std::vector<double> row(n);
    for (std::size_t s; (s = next.fetch_add(1)) < n;) {
      sweep.run(static_cast<NodeId>(s), options.underflow_threshold, row);
      double sum = 0.0;
      for (double h : row) sum += h;
      report.per_source_bits[s] = sum;
      if (report.pair_bits) {
        std::copy(row.begin(), row.end(), report.pair_bits->begin() + static_cast<std::ptrdiff_t>(s * n));
      }
    }
  };

  const unsigned threads = resolve_threads(options.threads, n);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (double h : report.per_source_bits) report.total_bits += h;
  report.average_bits = n == 0 ? 0.0 : report.total_bits / (static_cast<double>(n) * n);
  return report;
}

double total_search_information(const Graph& g) {
  SearchInfoOptions options;
  options.threads = 1;
  return search_information(g, options).total_bits;
}

double chain_search_information(std::uint64_t n) {
  if (n == 0) throw ArgumentError("chain needs at least one node");
  if (n <= 2) return 0.0;
  return static_cast<double>(n - 2) * static_cast<double>(n - 1);
}

RingSplit ring_min_simplified_h(std::uint64_t n) {
  if (n < 3) throw ArgumentError(fmt::format("ring needs at least 3 nodes, got {}", n));
  const std::uint64_t q = n / 3;
  const std::uint64_t r = n % 3;
  RingSplit split;
  split.parts = {q + (r > 0 ? 1 : 0), q + (r > 1 ? 1 : 0), q};
  split.bits = 6.0;
  for (auto p : split.parts) split.bits += chain_search_information(p);
  return split;
}

}  // namespace navskel
