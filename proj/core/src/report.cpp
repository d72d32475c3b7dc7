#include "navskel/report.hpp"

#include <cstdlib>

#include <fmt/format.h>

#include "json.hpp"
#include "navskel/graph_io.hpp"

namespace navskel::report {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json summary_json(const GraphSummary& s) {
  Json j;
  j["n"] = s.nodes;
  j["l"] = s.links;
  j["components"] = s.components;
  j["cyclomatic"] = s.cyclomatic;
  return j;
}

Json simplification(const Graph& original, const ContractionResult& r) {
  const auto& net = r.network;
  Json edges = Json::array();
  for (const auto& link : net.skeleton.links()) edges.push_back({link.u, link.v});
  Json members = Json::array();
  for (const auto& node : net.supernodes) {
    Json labels = Json::array();
    for (NodeId v : node.members) labels.push_back(original.label(v));
    members.push_back(std::move(labels));
  }
  Json per_node = Json::array();
  for (double h : r.info.h_supernodes) per_node.push_back(round6(h));

  Json j;
  j["skeleton_nodes"] = net.skeleton.node_count();
  j["skeleton_edges"] = std::move(edges);
  j["supernode_members"] = std::move(members);
  j["h_skeleton"] = round6(r.info.h_skeleton);
  j["h_supernodes"] = std::move(per_node);
  j["h_supernodes_total"] = round6(r.info.h_supernodes_total);
  j["h_simp"] = round6(r.info.h_simp);
  j["trial_index"] = r.trial_index;
  return j;
}

Json fit_object(const PowerLawFit& fit) {
  Json j;
  j["amplitude"] = round6(fit.amplitude);
  j["exponent"] = round6(fit.exponent);
  j["r_squared"] = round6(fit.r_squared);
  j["n_points"] = fit.n_points;
  return j;
}

}  // namespace

std::string format_real(double value) { return fmt::format("{:.6g}", value); }

double round6(double value) { return std::strtod(format_real(value).c_str(), nullptr); }

GraphSummary summarize(const Graph& g) {
  const auto comps = connected_components(g);
  return GraphSummary{g.node_count(), g.link_count(), comps.count,
                      static_cast<std::int64_t>(g.link_count()) -
                          static_cast<std::int64_t>(g.node_count()) +
                          static_cast<std::int64_t>(comps.count)};
}

std::string info_json(const GraphSummary& graph, const std::optional<GraphSummary>& quotient) {
  Json j = summary_json(graph);
  if (quotient) j["partition"] = summary_json(*quotient);
  return dump(j);
}

std::string info_csv(const GraphSummary& graph, const std::optional<GraphSummary>& quotient) {
  std::string out = "n,l,components,cyclomatic";
  if (quotient) out += ",quotient_n,quotient_l,quotient_components,quotient_cyclomatic";
  out += fmt::format("\n{},{},{},{}", graph.nodes, graph.links, graph.components, graph.cyclomatic);
  if (quotient) {
    out += fmt::format(",{},{},{},{}", quotient->nodes, quotient->links, quotient->components,
                       quotient->cyclomatic);
  }
  return out + "\n";
}

std::string search_info_json(const SearchInfoReport& r) {
  Json j;
  j["n"] = r.node_count;
  j["l"] = r.link_count;
  j["total_bits"] = round6(r.total_bits);
  j["average_bits"] = round6(r.average_bits);
  Json per_source = Json::array();
  for (double h : r.per_source_bits) per_source.push_back(round6(h));
  j["per_source_bits"] = std::move(per_source);
  if (r.pair_bits) {
    Json rows = Json::array();
    for (std::size_t s = 0; s < r.node_count; ++s) {
      Json row = Json::array();
      for (std::size_t d = 0; d < r.node_count; ++d) {
        row.push_back(round6(r.pair(static_cast<NodeId>(s), static_cast<NodeId>(d))));
      }
      rows.push_back(std::move(row));
    }
    j["pair_bits"] = std::move(rows);
  }
  return dump(j);
}

std::string per_source_csv(const Graph& g, const SearchInfoReport& r) {
  std::string out = "source_label,bits\n";
  for (NodeId s = 0; s < r.node_count; ++s) {
    out += fmt::format("{},{}\n", g.label(s), format_real(r.per_source_bits[s]));
  }
  return out;
}

std::string pair_matrix_csv(const Graph& g, const SearchInfoReport& r) {
  std::string out = "source_label,dest_label,bits\n";
  for (NodeId s = 0; s < r.node_count; ++s) {
    for (NodeId d = 0; d < r.node_count; ++d) {
      if (s == d) continue;
      out += fmt::format("{},{},{}\n", g.label(s), g.label(d), format_real(r.pair(s, d)));
    }
  }
  return out;
}

std::string simplification_json(const Graph& original, const ContractionResult& r) {
  return dump(simplification(original, r));
}

std::string membership_csv(const Graph& original, const SimplifiedNetwork& s) {
  std::string out = "label,supernode\n";
  for (NodeId v = 0; v < original.node_count(); ++v) {
    out += fmt::format("{},{}\n", original.label(v), s.membership[v]);
  }
  return out;
}

std::string skeleton_dot(const SimplifiedNetwork& s) {
  std::vector<std::uint64_t> sizes;
  sizes.reserve(s.supernodes.size());
  for (const auto& node : s.supernodes) sizes.push_back(node.members.size());
  return to_dot(s.skeleton, std::span<const std::uint64_t>(sizes));
}

std::string minimize_json(const Graph& original, const MinimizeResult& r, std::size_t trials,
                          std::uint64_t seed) {
  Json j;
  j["n"] = original.node_count();
  j["l"] = original.link_count();
  j["trials"] = trials;
  j["seed"] = seed;
  j["best"] = simplification(original, r.best);
  j["worst"] = simplification(original, r.worst);
  return dump(j);
}

std::string samples_csv(std::span<const ContractionSample> samples) {
  std::string out = "trial,skeleton_nodes,h_skeleton,h_supernodes,h_simp\n";
  for (const auto& s : samples) {
    out += fmt::format("{},{},{},{},{}\n", s.trial, s.skeleton_nodes, format_real(s.h_skeleton),
                       format_real(s.h_supernodes), format_real(s.h_simp));
  }
  return out;
}

std::string fit_json(const PowerLawFit& fit) { return dump(fit_object(fit)); }

std::string estimate_json(const SkeletonEstimate& e) {
  Json j;
  j["h_skeleton"] = round6(e.h_skeleton);
  j["ratio"] = round6(e.ratio);
  j["estimate_bits"] = round6(e.estimate_bits);
  j["low_confidence"] = e.low_confidence;
  return dump(j);
}

std::string estimate_csv(const SkeletonEstimate& e) {
  return fmt::format("h_skeleton,ratio,estimate_bits,low_confidence\n{},{},{},{}\n",
                     format_real(e.h_skeleton), format_real(e.ratio),
                     format_real(e.estimate_bits), e.low_confidence ? "true" : "false");
}

std::string tree_scaling_csv(std::span<const TreeScalingRow> rows) {
  std::string out = "n,mean_bits,std_bits,samples\n";
  for (const auto& row : rows) {
    out += fmt::format("{},{},{},{}\n", row.n, format_real(row.mean_bits),
                       format_real(row.std_bits), row.samples);
  }
  return out;
}

std::string tree_scaling_json(const TreeScalingResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["n"] = row.n;
    jr["mean_bits"] = round6(row.mean_bits);
    jr["std_bits"] = round6(row.std_bits);
    jr["samples"] = row.samples;
    rows.push_back(std::move(jr));
  }
  Json j;
  j["rows"] = std::move(rows);
  j["fit"] = r.has_fit ? fit_object(r.fit) : Json(nullptr);
  return dump(j);
}

std::string edges_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& link : g.links()) edges.push_back({g.label(link.u), g.label(link.v)});
  Json j;
  j["n"] = g.node_count();
  j["l"] = g.link_count();
  j["edges"] = std::move(edges);
  return dump(j);
}

}  // namespace navskel::report
