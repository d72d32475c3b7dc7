#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "json.hpp"

namespace navskel::cli {
namespace {

using nlohmann::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "navskel");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kKarate = NAVSKEL_DATA_DIR "/karate.edges";

TEST(Cli, GenRingPipedIntoMinimize) {
  const auto ring = invoke({"gen", "ring", "12"});
  ASSERT_EQ(ring.code, kExitOk);
  const auto r = invoke({"minimize", "--trials", "500", "--seed", "42"}, ring.out);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["best"]["h_simp"], 24.0);
  EXPECT_EQ(j["worst"]["h_simp"], 78.0);
}

TEST(Cli, KarateSearchInfo) {
  const auto r = invoke({"search-info", kKarate});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["total_bits"].get<double>(), 6061.0, 1.0);
  EXPECT_EQ(j["n"], 34);
}

TEST(Cli, KarateInfoWithPartition) {
  const auto r = invoke({"info", kKarate, "--partition", NAVSKEL_DATA_DIR "/karate_communities.part"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["cyclomatic"], 45);
  EXPECT_EQ(j["partition"]["n"], 4);
  EXPECT_LT(j["partition"]["cyclomatic"].get<int>(), 45);
}

TEST(Cli, KarateEstimate) {
  const auto r = invoke({"estimate", kKarate});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["low_confidence"], false);
  EXPECT_GE(j["ratio"].get<double>(), 0.3);
  EXPECT_NEAR(j["estimate_bits"].get<double>(), 6061.0, 0.5 * 6061.0);
}

TEST(Cli, EstimateConstantsOverride) {
  const auto base = json::parse(invoke({"estimate", kKarate}).out);
  const auto doubled = invoke({"estimate", kKarate, "--constants",
                               "inverse_amplitude=" + std::to_string(2 * 1.012)});
  ASSERT_EQ(doubled.code, kExitOk) << doubled.err;
  EXPECT_NEAR(json::parse(doubled.out)["estimate_bits"].get<double>(),
              2 * base["estimate_bits"].get<double>(), 0.1);
  EXPECT_EQ(invoke({"estimate", kKarate, "--constants", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(invoke({"estimate", kKarate, "--constants", "bogus_key=1"}).code, kExitDomain);
}

TEST(Cli, ContractFormats) {
  const auto ring = invoke({"gen", "ring", "8"}).out;
  EXPECT_EQ(invoke({"contract", "--format", "dot"}, ring).out.rfind("graph G {", 0), 0u);
  EXPECT_EQ(invoke({"contract", "--format", "csv"}, ring).out.rfind("label,supernode\n", 0), 0u);
  const auto j = json::parse(invoke({"contract", "--strategy", "degree"}, ring).out);
  EXPECT_EQ(j["skeleton_nodes"], 3);
  EXPECT_EQ(j["trial_index"], 0);
}

TEST(Cli, RandomizeKeepsDegrees) {
  const auto r = invoke({"randomize", kKarate, "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["l"], 78);
}

TEST(Cli, TreeScalingAndFit) {
  const auto r = invoke({"tree-scaling", "--n-min", "10", "--n-max", "40", "--step", "10",
                         "--samples", "20", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("n,mean_bits,std_bits,samples\n", 0), 0u);

  // Feed the table's first two columns to the fitter.
  std::istringstream rows(r.out);
  std::string line;
  std::getline(rows, line);
  std::string xy = "x,y\n";
  while (std::getline(rows, line)) {
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    xy += line.substr(0, second) + "\n";
  }
  const auto fit = invoke({"fit"}, xy);
  ASSERT_EQ(fit.code, kExitOk) << fit.err;
  EXPECT_GT(json::parse(fit.out)["exponent"].get<double>(), 2.0);
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  const auto a = invoke({"minimize", kKarate, "--trials", "100", "--threads", "1"});
  const auto b = invoke({"minimize", kKarate, "--trials", "100", "--threads", "3"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(invoke({"search-info", kKarate, "--format", "csv"}).out,
            invoke({"search-info", kKarate, "--format", "csv"}).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"search-info", kKarate, "--format", "dot"}).code, kExitUsage);
  EXPECT_EQ(invoke({"fit", "--format", "csv"}).code, kExitUsage);
  EXPECT_EQ(invoke({"minimize", kKarate, "--trials", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"gen", "hexagon", "6"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, DomainErrorsAreOneLine) {
  const auto missing = invoke({"info", "/nonexistent/graph.edges"});
  EXPECT_EQ(missing.code, kExitDomain);
  EXPECT_EQ(missing.err.rfind("navskel: error: ", 0), 0u);
  EXPECT_EQ(std::count(missing.err.begin(), missing.err.end(), '\n'), 1);
  EXPECT_TRUE(missing.out.empty());

  const auto disconnected = invoke({"search-info"}, "a b\nc d\n");
  EXPECT_EQ(disconnected.code, kExitDomain);
  EXPECT_NE(disconnected.err.find("'a'"), std::string::npos);

  const auto parse = invoke({"info"}, "a b\nc\n");
  EXPECT_EQ(parse.code, kExitDomain);
  EXPECT_NE(parse.err.find("2"), std::string::npos);

  EXPECT_EQ(invoke({"gen", "ring", "2"}).code, kExitDomain);
  EXPECT_EQ(invoke({"fit"}, "1,1\n2,2\n").code, kExitDomain);
}

}  // namespace
}  // namespace navskel::cli
