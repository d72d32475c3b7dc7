#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "navskel/error.hpp"
#include "navskel/estimator.hpp"
#include "navskel/graph_io.hpp"
#include "navskel/report.hpp"
#include "navskel/search_info.hpp"

namespace navskel::cli {
namespace {

const std::map<std::string, OutputFormat> kFormats{{"json", OutputFormat::kJson},
                                                   {"csv", OutputFormat::kCsv},
                                                   {"dot", OutputFormat::kDot},
                                                   {"edges", OutputFormat::kEdges}};
const std::map<std::string, OrderingKind> kStrategies{{"random", OrderingKind::kRandom},
                                                      {"degree", OrderingKind::kDegreeSum}};
const std::map<std::string, TreeEnsemble> kEnsembles{{"uniform", TreeEnsemble::kUniform},
                                                     {"attachment", TreeEnsemble::kAttachment}};

const char* format_name(OutputFormat f) {
  for (const auto& [name, value] : kFormats) {
    if (value == f) return name.c_str();
  }
  return "?";
}

const char* command_name(Command c) {
  switch (c) {
    case Command::kInfo: return "info";
    case Command::kSearchInfo: return "search-info";
    case Command::kContract: return "contract";
    case Command::kMinimize: return "minimize";
    case Command::kEstimate: return "estimate";
    case Command::kRandomize: return "randomize";
    case Command::kGen: return "gen";
    case Command::kTreeScaling: return "tree-scaling";
    case Command::kFit: return "fit";
  }
  return "?";
}

// Raised for flag combinations the parser cannot see, e.g. a format the
// command has no rendering for.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Input {
 public:
  Input(const std::string& path, std::istream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) throw ArgumentError("cannot open '" + path + "'");
      stream_ = &file_;
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

Graph read_graph(const RunConfig& config, std::istream& in) {
  Input input(config.input_path, in);
  return load_edge_list(input.get());
}

OutputFormat resolve_format(const RunConfig& config, std::initializer_list<OutputFormat> allowed) {
  const OutputFormat f = config.format.value_or(*allowed.begin());
  for (auto a : allowed) {
    if (a == f) return f;
  }
  throw UsageError(std::string("--format ") + format_name(f) + " is not available for '" +
                   command_name(config.command) + "'");
}

std::string render_graph(const Graph& g, OutputFormat f) {
  switch (f) {
    case OutputFormat::kEdges: {
      std::ostringstream ss;
      write_edge_list(g, ss);
      return ss.str();
    }
    case OutputFormat::kJson: return report::edges_json(g);
    case OutputFormat::kDot: return to_dot(g);
    case OutputFormat::kCsv: {
      std::string out = "source,target\n";
      for (const auto& link : g.links()) out += g.label(link.u) + "," + g.label(link.v) + "\n";
      return out;
    }
  }
  return {};
}

std::vector<PowerLawPoint> read_points(std::istream& in) {
  std::vector<PowerLawPoint> points;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    for (char& c : line) {
      if (c == ',' || c == ';' || c == '\t') c = ' ';
    }
    std::istringstream ss(line);
    std::string a, b, extra;
    if (!(ss >> a) || a.front() == '#') continue;
    if (!(ss >> b) || (ss >> extra)) throw ParseError(lineno, "expected two columns 'x,y'");
    auto parse = [&](const std::string& tok, double& out) {
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
      return ec == std::errc{} && ptr == tok.data() + tok.size();
    };
    PowerLawPoint p;
    if (!parse(a, p.x) || !parse(b, p.y)) {
      if (points.empty() && lineno == 1) continue;  // header row
      throw ParseError(lineno, "'" + a + "," + b + "' is not numeric");
    }
    points.push_back(p);
  }
  return points;
}

std::string run_command(const RunConfig& config, std::istream& in) {
  switch (config.command) {
    case Command::kInfo: {
      const auto f = resolve_format(config, {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kDot});
      const auto g = read_graph(config, in);
      if (f == OutputFormat::kDot) return to_dot(g);
      std::optional<report::GraphSummary> quotient;
      if (config.partition_path) {
        quotient = report::summarize(quotient_graph(g, load_partition_file(*config.partition_path, g)));
      }
      const auto summary = report::summarize(g);
      return f == OutputFormat::kJson ? report::info_json(summary, quotient)
                                      : report::info_csv(summary, quotient);
    }
    case Command::kSearchInfo: {
      const auto f = resolve_format(config, {OutputFormat::kJson, OutputFormat::kCsv});
      const auto g = read_graph(config, in);
      SearchInfoOptions options;
      options.keep_pairs = config.pairs;
      options.threads = config.threads;
      const auto r = search_information(g, options);
      if (f == OutputFormat::kJson) return report::search_info_json(r);
      return config.pairs ? report::pair_matrix_csv(g, r) : report::per_source_csv(g, r);
    }
    case Command::kContract: {
      const auto f = resolve_format(config, {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kDot});
      const auto g = read_graph(config, in);
      const ContractionStrategy strategy{config.strategy.value_or(OrderingKind::kRandom), config.seed};
      ContractionResult r;
      r.network = tree_contract(g, order_links(g, strategy));
      if (strategy.kind == OrderingKind::kRandom) r.network.ordering_seed = strategy.seed;
      r.info = simplified_search_information(r.network);
      if (f == OutputFormat::kDot) return report::skeleton_dot(r.network);
      if (f == OutputFormat::kCsv) return report::membership_csv(g, r.network);
      return report::simplification_json(g, r);
    }
    case Command::kMinimize: {
      const auto f = resolve_format(config, {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kDot});
      const auto g = read_graph(config, in);
      const auto r = minimize_h_simp(g, config.trials, config.seed, config.threads);
      if (f == OutputFormat::kDot) return report::skeleton_dot(r.best.network);
      if (f == OutputFormat::kCsv) return report::samples_csv(r.samples);
      return report::minimize_json(g, r, config.trials, config.seed);
    }
    case Command::kEstimate: {
      const auto f = resolve_format(config, {OutputFormat::kJson, OutputFormat::kCsv});
      ScalingConstants constants;
      for (const auto& [key, value] : config.constants_overrides) constants.set(key, value);
      const auto g = read_graph(config, in);
      const ContractionStrategy strategy{config.strategy.value_or(OrderingKind::kDegreeSum), config.seed};
      const auto net = tree_contract(g, order_links(g, strategy));
      const double h_skeleton = total_search_information(net.skeleton);
      const auto e = estimate_from_skeleton(h_skeleton, net.skeleton.node_count(), g.node_count(), constants);
      return f == OutputFormat::kJson ? report::estimate_json(e) : report::estimate_csv(e);
    }
    case Command::kRandomize: {
      const auto f = resolve_format(config, {OutputFormat::kEdges, OutputFormat::kJson,
                                             OutputFormat::kCsv, OutputFormat::kDot});
      const auto g = read_graph(config, in);
      const auto attempts = config.swap_attempts.value_or(10 * g.link_count());
      return render_graph(rewire_degree_preserving(g, attempts, config.seed), f);
    }
    case Command::kGen: {
      const auto f = resolve_format(config, {OutputFormat::kEdges, OutputFormat::kJson,
                                             OutputFormat::kCsv, OutputFormat::kDot});
      const auto n = config.gen_n;
      Graph g;
      if (config.gen_kind == "ring") {
        g = gen_ring(n);
      } else if (config.gen_kind == "chain") {
        g = gen_chain(n);
      } else if (config.gen_kind == "complete") {
        g = gen_complete(n);
      } else if (config.gen_kind == "tree") {
        g = config.ensemble == TreeEnsemble::kUniform ? gen_random_tree(n, config.seed)
                                                      : gen_attachment_tree(n, config.seed);
      } else if (config.gen_kind == "er") {
        g = gen_connected_random(n, config.gen_p, config.seed);
      } else if (config.gen_kind == "chorded-tree") {
        g = gen_tree_with_chords(n, config.gen_chords, config.seed);
      } else {
        throw UsageError("unknown graph kind '" + config.gen_kind + "'");
      }
      return render_graph(g, f);
    }
    case Command::kTreeScaling: {
      const auto f = resolve_format(config, {OutputFormat::kJson, OutputFormat::kCsv});
      auto scaling = config.scaling;
      scaling.seed = config.seed;
      scaling.threads = config.threads;
      const auto r = tree_scaling_experiment(scaling);
      return f == OutputFormat::kJson ? report::tree_scaling_json(r)
                                      : report::tree_scaling_csv(r.rows);
    }
    case Command::kFit: {
      resolve_format(config, {OutputFormat::kJson});
      Input input(config.input_path, in);
      return report::fit_json(fit_power_law(read_points(input.get())));
    }
  }
  throw UsageError("unknown command");
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case).description(""))
      ->type_name("json|csv|dot|edges");
  sub->add_option("--seed", c.seed, "Random seed");
  sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
}

void add_input(CLI::App* sub, RunConfig& c) {
  sub->add_option("input", c.input_path, "Edge list file ('-' or omitted: stdin)");
}

}  // namespace

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Search information and path-diversity-preserving network simplification", "navskel"};
  app.require_subcommand(1);

  std::map<CLI::App*, Command> commands;
  auto command = [&](const char* name, const char* help, Command cmd) {
    auto* sub = app.add_subcommand(name, help);
    commands[sub] = cmd;
    add_common(sub, c);
    return sub;
  };

  auto* info = command("info", "Nodes, links, components and cyclomatic number", Command::kInfo);
  add_input(info, c);
  info->add_option("--partition", c.partition_path,
                   "Partition file (LABEL GROUP); adds the quotient graph's metrics");

  auto* search = command("search-info", "Search information totals and averages", Command::kSearchInfo);
  add_input(search, c);
  search->add_flag("--pairs", c.pairs, "Emit the full pair matrix");

  auto* contract = command("contract", "One tree-contraction pass", Command::kContract);
  add_input(contract, c);
  contract->add_option("--strategy", c.strategy, "Link ordering (default random)")
      ->transform(CLI::CheckedTransformer(kStrategies, CLI::ignore_case).description(""))
      ->type_name("random|degree");

  auto* minimize = command("minimize", "Least and largest H_simp over random orderings", Command::kMinimize);
  add_input(minimize, c);
  minimize->add_option("--trials", c.trials, "Random orderings to try")->check(CLI::PositiveNumber);

  auto* estimate = command("estimate", "Estimate H from a skeleton via the scaling law", Command::kEstimate);
  add_input(estimate, c);
  estimate->add_option("--strategy", c.strategy, "Link ordering (default degree)")
      ->transform(CLI::CheckedTransformer(kStrategies, CLI::ignore_case).description(""))
      ->type_name("random|degree");
  std::vector<std::string> constants;
  estimate->add_option("--constants", constants, "Override a scaling constant, KEY=VALUE");

  auto* randomize = command("randomize", "Degree-preserving connected rewiring", Command::kRandomize);
  add_input(randomize, c);
  randomize->add_option("--attempts", c.swap_attempts, "Swap attempts (default 10 L)");

  auto* gen = command("gen", "Generate a graph: ring|chain|complete|tree|er|chorded-tree", Command::kGen);
  gen->add_option("kind", c.gen_kind, "Graph family")
      ->required()
      ->check(CLI::IsMember({"ring", "chain", "complete", "tree", "er", "chorded-tree"}));
  gen->add_option("n", c.gen_n, "Node count")->required();
  gen->add_option("--p", c.gen_p, "Link probability for 'er'");
  gen->add_option("--chords", c.gen_chords, "Extra links for 'chorded-tree'");
  gen->add_option("--ensemble", c.ensemble, "Tree ensemble for 'tree'")
      ->transform(CLI::CheckedTransformer(kEnsembles, CLI::ignore_case).description(""))
      ->type_name("uniform|attachment");

  auto* scaling = command("tree-scaling", "Mean search information of random trees by size", Command::kTreeScaling);
  scaling->add_option("--n-min", c.scaling.n_min, "Smallest tree");
  scaling->add_option("--n-max", c.scaling.n_max, "Largest tree");
  scaling->add_option("--step", c.scaling.step, "Size increment");
  scaling->add_option("--samples", c.scaling.samples, "Trees per size");
  scaling->add_option("--ensemble", c.scaling.ensemble, "Tree ensemble (default attachment)")
      ->transform(CLI::CheckedTransformer(kEnsembles, CLI::ignore_case).description(""))
      ->type_name("uniform|attachment");

  auto* fit = command("fit", "Power-law fit of 'x,y' rows", Command::kFit);
  add_input(fit, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return {std::nullopt, kExitOk};
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return {std::nullopt, kExitOk};
  } catch (const CLI::ParseError& e) {
    err << "navskel: error: usage: " << e.what() << "\n";
    return {std::nullopt, kExitUsage};
  }

  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) c.command = cmd;
  }
  for (const auto& kv : constants) {
    const auto eq = kv.find('=');
    double value = 0.0;
    const char* first = kv.data() + (eq == std::string::npos ? 0 : eq + 1);
    const char* last = kv.data() + kv.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (eq == std::string::npos || eq == 0 || ec != std::errc{} || ptr != last) {
      err << "navskel: error: usage: --constants expects KEY=VALUE, got '" << kv << "'\n";
      return {std::nullopt, kExitUsage};
    }
    c.constants_overrides.emplace_back(kv.substr(0, eq), value);
  }
  return {std::move(c), kExitOk};
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    out << run_command(config, in);
    out.flush();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "navskel: error: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "navskel: error: " << e.kind() << ": " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "navskel: error: internal: " << e.what() << "\n";
    return kExitDomain;
  }
}

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
  auto parsed = parse_args(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, in, out, err);
}

}  // namespace navskel::cli
