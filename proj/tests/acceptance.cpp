// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "navskel/contraction.hpp"
#include "navskel/estimator.hpp"
#include "navskel/generators.hpp"
#include "navskel/graph_io.hpp"
#include "navskel/random.hpp"
#include "navskel/search_info.hpp"
#include "network_checks.hpp"
#include "oracles.hpp"

namespace {

using namespace navskel;

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;
  std::function<Verdict()> body;
};

Graph karate() { return load_edge_list_file(NAVSKEL_DATA_DIR "/karate.edges"); }

Verdict chain_closed_form() {
  for (std::uint64_t n = 2; n <= 100; ++n) {
    const double h = total_search_information(gen_chain(n));
    const double expected = static_cast<double>((n - 2) * (n - 1));
    if (h != expected) return {false, fmt::format("n={} gave {} != {}", n, h, expected)};
  }
  return {true, "n=2..100 exact"};
}

Verdict ring_minimum() {
  const auto r = minimize_h_simp(gen_ring(12), 500, 42);
  std::string detail = fmt::format("ring-12 best {} worst {}", r.best.info.h_simp, r.worst.info.h_simp);
  bool pass = r.best.info.h_simp == 24.0 && r.worst.info.h_simp == 78.0;
  for (std::uint64_t n : {6u, 9u, 12u, 15u}) {
    const double nn = static_cast<double>(n);
    const double formula = nn * nn / 3 - 3 * nn + 12;
    const double best = minimize_h_simp(gen_ring(n), 500, 42).best.info.h_simp;
    detail += fmt::format("; N={} best {} formula {}", n, best, formula);
    pass = pass && best == formula;
  }
  return {pass, detail};
}

Verdict triangle() {
  const double h = total_search_information(gen_complete(3));
  return {h == 6.0, fmt::format("H(K3) = {}", h)};
}

Verdict karate_regression() {
  const auto g = karate();
  const double h = total_search_information(g);
  const auto c = cyclomatic_number(g);
  const auto r = minimize_h_simp(g, 500, 42);
  const auto size = r.best.network.skeleton.node_count();
  const bool pass = std::abs(h - 6061.0) <= 1.0 && c == 45 && r.best.info.h_simp <= 4320.0 &&
                    size >= 28 && size <= 31;
  return {pass, fmt::format("H={:.2f} C={} best h_simp={:.2f} (published 4233, {:+.2f}%) skeleton {} nodes",
                            h, c, r.best.info.h_simp, 100.0 * relative_error(r.best.info.h_simp, 4233.0),
                            size)};
}

Verdict brute_force() {
  Rng rng(20240601);
  double worst = 0.0;
  std::size_t pairs = 0;
  for (int graph = 0; graph < 200; ++graph) {
    const auto n = 2 + rng.below(7);
    const auto g = gen_connected_random(n, 0.3 + 0.5 * rng.uniform01(), rng.next());
    for (NodeId s = 0; s < n; ++s) {
      const auto row = source_search_information(g, s);
      for (NodeId d = 0; d < n; ++d) {
        worst = std::max(worst, std::abs(row[d] - oracle::enumerate_pair_bits(g, s, d)));
        ++pairs;
      }
    }
  }
  return {worst <= 1e-9, fmt::format("200 graphs, {} pairs, max |diff| = {:.3g} bits", pairs, worst)};
}

Verdict structural_invariants() {
  Rng rng(7);
  std::size_t networks = 0;
  for (int graph = 0; graph < 500; ++graph) {
    const auto n = 3 + rng.below(58);
    const double nn = static_cast<double>(n);
    const double floor = std::min(0.9, 1.5 * std::log(nn) / nn);
    const auto g = gen_connected_random(n, floor + (0.9 - floor) * 0.3 * rng.uniform01(), rng.next());
    for (int ordering = 0; ordering < 5; ++ordering) {
      const auto order = ordering == 0 ? order_links_degree(g) : order_links_random(g, rng.next());
      const auto s = tree_contract(g, order);
      if (auto why = checks::simplification_violation(g, s); !why.empty()) {
        return {false, fmt::format("graph {} ordering {}: {}", graph, ordering, why)};
      }
      const auto again = tree_contract(s.skeleton, order_links_random(s.skeleton, rng.next()));
      const bool same = again.supernodes.size() == s.supernodes.size() &&
                        std::equal(again.skeleton.links().begin(), again.skeleton.links().end(),
                                   s.skeleton.links().begin(), s.skeleton.links().end());
      if (!same) return {false, fmt::format("graph {} ordering {}: re-contraction changed skeleton", graph, ordering)};
      ++networks;
    }
  }
  return {true, fmt::format("{} simplified networks checked", networks)};
}

Verdict tree_scaling() {
  TreeScalingConfig config;  // N = 10..100 step 10, 1000 samples, default ensemble
  const auto r = tree_scaling_experiment(config);
  const bool pass = r.has_fit && r.fit.exponent >= 2.45 && r.fit.exponent <= 2.65 && r.fit.r_squared >= 0.99;
  std::string detail = fmt::format("attachment trees: H = {:.4f} N^{:.4f}, r2 = {:.5f}", r.fit.amplitude,
                                   r.fit.exponent, r.fit.r_squared);
  // Reported for comparison only; not part of the verdict.
  config.ensemble = TreeEnsemble::kUniform;
  const auto u = tree_scaling_experiment(config);
  detail += fmt::format(" [uniform labeled trees: N^{:.4f}, r2 = {:.5f}]", u.fit.exponent, u.fit.r_squared);
  return {pass, detail};
}

Verdict estimator_sanity() {
  double worst_complete = 0.0;
  for (std::uint64_t n = 3; n <= 20; ++n) {
    const auto k = gen_complete(n);
    const auto s = tree_contract(k, order_links_degree(k));
    if (s.skeleton.node_count() != n) return {false, fmt::format("K{} skeleton lost nodes", n)};
    const double h = total_search_information(k);
    const double estimate = estimate_h_from_skeleton(total_search_information(s.skeleton), n, n);
    worst_complete = std::max(worst_complete, std::abs(estimate - 1.012 * h) / h);
  }
  const auto g = karate();
  const auto s = tree_contract(g, order_links_degree(g));
  const auto e = estimate_from_skeleton(total_search_information(s.skeleton), s.skeleton.node_count(),
                                        g.node_count());
  const double err = relative_error(e.estimate_bits, total_search_information(g));
  const bool flag_ok = e.ratio < kReliableSkeletonRatio || !e.low_confidence;
  const bool pass = worst_complete <= 1e-12 && std::abs(err) < 0.5 && flag_ok;
  return {pass, fmt::format("K3..K20 max |est/H - 1.012| = {:.2g}; karate ratio {:.4f} estimate {:.2f} "
                            "rel. error {:+.4f} low_confidence {}",
                            worst_complete, e.ratio, e.estimate_bits, err, e.low_confidence)};
}

Verdict randomization() {
  Rng rng(99);
  std::size_t changed = 0;
  for (int graph = 0; graph < 50; ++graph) {
    const auto n = 6 + rng.below(50);
    const auto g = graph % 2 == 0 ? gen_tree_with_chords(n, 2 + rng.below(n / 2), rng.next())
                                  : gen_connected_random(n, 0.2, rng.next());
    for (int seed = 0; seed < 5; ++seed) {
      const auto r = rewire_degree_preserving(g, 10 * g.link_count(), rng.next());
      if (r.degrees() != g.degrees()) return {false, fmt::format("graph {}: degree sequence changed", graph)};
      if (!is_connected(r)) return {false, fmt::format("graph {}: rewired graph disconnected", graph)};
      changed += !std::equal(r.links().begin(), r.links().end(), g.links().begin(), g.links().end());
    }
  }
  return {true, fmt::format("50 graphs x 5 seeds; {} of 250 rewired graphs differ from the input", changed)};
}

Verdict synthetic_scaling() {
  std::vector<Graph> corpus;
  for (std::uint64_t n : {8u, 12u, 16u, 20u, 30u, 40u, 50u, 60u, 80u, 100u}) corpus.push_back(gen_ring(n));
  for (std::uint64_t i = 0; i < 10; ++i) corpus.push_back(gen_tree_with_chords(20 + 8 * i, 2 + i, 100 + i));
  for (std::uint64_t i = 0; i < 10; ++i) {
    const double n = 20.0 + 8.0 * static_cast<double>(i);
    corpus.push_back(gen_connected_random(20 + 8 * i, 1.5 * std::log(n) / n, 200 + i));
  }
  std::vector<PowerLawPoint> points;
  for (const auto& g : corpus) {
    const auto best = minimize_h_simp(g, 50, 42).best;
    points.push_back({static_cast<double>(best.network.skeleton.node_count()) / static_cast<double>(g.node_count()),
                      best.info.h_skeleton / total_search_information(g)});
  }
  const auto fit = fit_power_law(points);
  const bool pass = fit.exponent > 0 && fit.r_squared >= 0.9;
  return {pass, fmt::format("{} graphs: H_sk/H_o = {:.4f} (N_sk/N_o)^{:.4f}, r2 = {:.4f}", points.size(),
                            fit.amplitude, fit.exponent, fit.r_squared)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "chain closed form", 1.0, chain_closed_form},
      {2, "ring minimum", 5.0, ring_minimum},
      {3, "triangle skeleton", 1.0, triangle},
      {4, "karate regression", 30.0, karate_regression},
      {5, "brute-force oracle", 60.0, brute_force},
      {6, "structural invariants", 120.0, structural_invariants},
      {7, "tree scaling", 600.0, tree_scaling},
      {8, "estimator sanity", 30.0, estimator_sanity},
      {9, "randomization", 60.0, randomization},
      {10, "synthetic scaling law", 120.0, synthetic_scaling},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.time_limit_s) {
      v.pass = false;
      v.detail += fmt::format("; over time limit {} s", c.time_limit_s);
    }
    failures += !v.pass;
    fmt::print("criterion {:>2} {:<22} {}  {} ({:.2f} s)\n", c.id, c.title, v.pass ? "PASS" : "FAIL",
               v.detail, seconds);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failures),
             criteria.size());
  return failures == 0 ? 0 : 1;
}
