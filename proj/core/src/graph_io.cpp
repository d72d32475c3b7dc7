#include "navskel/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include <fmt/format.h>

#include "navskel/error.hpp"

namespace navskel {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  for (std::string tok; ss >> tok;) tokens.push_back(std::move(tok));
  return tokens;
}

bool is_skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r\f\v");
  return first == std::string::npos || line[first] == '#';
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError(fmt::format("cannot open '{}'", path));
  return in;
}

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::string> labels;
  std::vector<Link> links;
  std::map<Link, std::size_t> first_line;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = index.try_emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (is_skippable(line)) continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError(lineno, fmt::format("expected 2 labels, found {}", tokens.size()));
    }
    if (tokens[0] == tokens[1]) {
      throw ValidationError(fmt::format("line {}: self-loop on '{}'", lineno, tokens[0]));
    }
    const NodeId a = intern(tokens[0]);
    const NodeId b = intern(tokens[1]);
    const Link link = make_link(a, b);
    if (auto [it, inserted] = first_line.try_emplace(link, lineno); !inserted) {
      throw ValidationError(fmt::format("line {}: duplicate link '{}' '{}' (first seen on line {})",
                                        lineno, tokens[0], tokens[1], it->second));
    }
    links.push_back(link);
  }
  const auto n = labels.size();
  return Graph::from_links(n, std::move(links), std::move(labels));
}

Graph load_edge_list_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& link : g.links()) out << g.label(link.u) << ' ' << g.label(link.v) << '\n';
}

Partition load_partition(std::istream& in, const Graph& g) {
  std::unordered_map<std::string, NodeId> index;
  for (NodeId v = 0; v < g.node_count(); ++v) index.emplace(g.label(v), v);

  constexpr auto kUnset = static_cast<std::uint64_t>(-1);
  std::vector<std::uint64_t> raw(g.node_count(), kUnset);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (is_skippable(line)) continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError(lineno, fmt::format("expected 'LABEL GROUP', found {} tokens", tokens.size()));
    }
    std::uint64_t group = 0;
    const auto& tok = tokens[1];
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), group);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError(lineno, fmt::format("group '{}' is not a non-negative integer", tok));
    }
    auto it = index.find(tokens[0]);
    if (it == index.end()) {
      throw ValidationError(fmt::format("line {}: unknown node '{}'", lineno, tokens[0]));
    }
    if (raw[it->second] != kUnset) {
      throw ValidationError(fmt::format("line {}: node '{}' assigned twice", lineno, tokens[0]));
    }
    raw[it->second] = group;
  }
  for (NodeId v = 0; v < raw.size(); ++v) {
    if (raw[v] == kUnset) {
      throw ValidationError(fmt::format("node '{}' has no group", g.label(v)));
    }
  }

  std::vector<std::uint64_t> distinct = raw;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::uint32_t> assignment(raw.size());
  for (std::size_t v = 0; v < raw.size(); ++v) {
    assignment[v] = static_cast<std::uint32_t>(
        std::lower_bound(distinct.begin(), distinct.end(), raw[v]) - distinct.begin());
  }
  return Partition::from_assignment(std::move(assignment));
}

Partition load_partition_file(const std::string& path, const Graph& g) {
  auto in = open_or_throw(path);
  return load_partition(in, g);
}

std::string to_dot(const Graph& g, std::optional<std::span<const std::uint64_t>> node_weights) {
  if (node_weights && node_weights->size() != g.node_count()) {
    throw ArgumentError(fmt::format("{} node weights for {} nodes", node_weights->size(),
                                    g.node_count()));
  }
  std::string out = "graph G {\n";
  if (node_weights && g.node_count() > 0) {
    const auto largest = *std::max_element(node_weights->begin(), node_weights->end());
    out += "  node [shape=circle, fixedsize=true];\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const auto w = (*node_weights)[v];
      const double size = largest == 0 ? 0.0 : 1.5 * static_cast<double>(w) / largest;
      out += fmt::format("  {} [members={}, width={:.4f}, height={:.4f}];\n",
                         dot_id(g.label(v)), w, size, size);
    }
  } else {
    for (NodeId v = 0; v < g.node_count(); ++v) out += fmt::format("  {};\n", dot_id(g.label(v)));
  }
  for (const auto& link : g.links()) {
    out += fmt::format("  {} -- {};\n", dot_id(g.label(link.u)), dot_id(g.label(link.v)));
  }
  out += "}\n";
  return out;
}

}  // namespace navskel
