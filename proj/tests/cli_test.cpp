#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cache.hpp"
#include "commands.hpp"
#include "linram/catalog.hpp"
#include "linram/enumerate.hpp"
#include "linram/graph6.hpp"

using namespace linram;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status = 0;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "linram");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

// the built binary, for exit statuses as the shell sees them
Outcome shell(const std::string& args) {
  Outcome o;
  const std::string cmd = std::string(LINRAM_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, "", ""};
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) o.out.append(buf.data(), n);
  const int st = pclose(p);
  o.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return o;
}

fs::path scratch(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("linram_cli_test_" + name);
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST(Cli, RamseyExample) {
  const auto o = call({"ramsey", "--forbid", "2K2,C4", "--p", "3", "--q", "3"});
  ASSERT_EQ(o.status, 0) << o.err;
  const auto j = json::parse(o.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "ramsey");
  EXPECT_EQ(j["value"], 6);
  EXPECT_EQ(j["saturated"], true);
  ASSERT_EQ(j["witnesses"].size(), 1U);
  EXPECT_TRUE(isomorphic(from_graph6(j["witnesses"][0].get<std::string>()), cycle(5)));
  EXPECT_EQ(j["cap"], 11);
}

TEST(Cli, BipartiteRamsey) {
  const auto o = call({"ramsey", "--bipartite", "--forbid", "P2+P3", "--p", "2", "--q", "2"});
  ASSERT_EQ(o.status, 0) << o.err;
  const auto j = json::parse(o.out);
  EXPECT_EQ(j["value"], 4);
  EXPECT_EQ(j["cap"], 6);
  EXPECT_EQ(j["bipartite"], true);
}

TEST(Cli, FormulaExample) {
  const auto o = call({"formula", "thm_diamond", "4", "5"});
  ASSERT_EQ(o.status, 0) << o.err;
  EXPECT_EQ(json::parse(o.out)["value"], 10);
  EXPECT_EQ(call({"formula", "thm_diamond", "2", "5"}).status, 1);
  EXPECT_EQ(call({"formula", "thm_nope", "3", "3"}).status, 1);
}

TEST(Cli, CheckExample) {
  const std::string g6 = to_graph6(rook3());
  const auto o = call({"check", "--graph", g6, "--forbid", "claw,co-claw,K4,co-K4"});
  ASSERT_EQ(o.status, 0) << o.err;
  const auto j = json::parse(o.out);
  EXPECT_EQ(j["in_class"], true);
  EXPECT_EQ(j["clique_number"], 3);
  EXPECT_EQ(j["independence_number"], 3);

  const auto bad = json::parse(call({"check", "--graph", "K1_3", "--forbid", "claw"}).out);
  EXPECT_EQ(bad["in_class"], false);
  EXPECT_EQ(bad["violation"]["embedding"].size(), 4U);
}

TEST(Cli, CrosscheckAndConstruct) {
  const auto o = call({"crosscheck", "thm_2k2_c4", "--a", "3..4", "--b", "3..4", "--cap", "9"});
  ASSERT_EQ(o.status, 0) << o.err;
  const auto j = json::parse(o.out);
  EXPECT_EQ(j["cells"].size(), 4U);
  // the (2K2, diamond) row b = 3 for a >= 6 disagrees with the engine
  EXPECT_EQ(call({"crosscheck", "thm_2k2_diamond", "--a", "6..6", "--b", "3..3", "--cap", "10"}).status, 2);
  EXPECT_EQ(call({"crosscheck", "thm_2k2_c4", "--a", "2..3", "--b", "3..3"}).status, 1);

  const auto c = call({"construct", "thm_claw_coclaw", "4", "4"});
  ASSERT_EQ(c.status, 0) << c.err;
  EXPECT_EQ(json::parse(c.out)["verified"], true);
  const auto g6 = call({"--format", "graph6", "construct", "thm_2k2_c4", "3", "3"});
  ASSERT_EQ(g6.status, 0);
  EXPECT_TRUE(isomorphic(from_graph6(g6.out.substr(0, g6.out.find('\n'))), cycle(5)));
  EXPECT_EQ(call({"construct", "thm_2k2_diamond", "6", "3"}).status, 2);
}

TEST(Cli, StructureCommands) {
  const auto d = call({"decompose", "--graph", to_line(bipartite_matching(2))});
  ASSERT_EQ(d.status, 0) << d.err;
  EXPECT_EQ(json::parse(d.out)["tree"]["kind"], "disjoint_union");

  const auto f = call({"find-hom", "--class", "p2p3", "--graph", to_line(bipartite_matching(4)), "--p", "2", "--q", "2"});
  ASSERT_EQ(f.status, 0) << f.err;
  EXPECT_EQ(json::parse(f.out)["witness"]["type"], "co-biclique");
  EXPECT_EQ(json::parse(f.out)["verified"], true);
  EXPECT_EQ(call({"find-hom", "--class", "p2p3", "--graph", to_line(bipartite_matching(3)), "--p", "2"}).status, 1);
  const auto s = call({"find-hom", "--class", "s123", "--graph", to_line(bipartite_complete(6, 6)), "--p", "1"});
  ASSERT_EQ(s.status, 0) << s.err;

  const auto l = call({"verify-lemma", "lem_k4", "--cap", "7"});
  ASSERT_EQ(l.status, 0) << l.err;
  EXPECT_EQ(call({"verify-lemma", "lem_nope"}).status, 1);

  const auto e = call({"enumerate", "--n", "4", "--count-only"});
  ASSERT_EQ(e.status, 0);
  EXPECT_EQ(json::parse(e.out)["count"], 11);
  const auto b = call({"enumerate", "--bipartite", "--na", "2", "--nb", "2"});
  EXPECT_EQ(json::parse(b.out)["count"], 7);
}

TEST(Cli, GirthSample) {
  const auto o = call({"girth-sample", "--n", "16", "--k", "6", "--seed", "5", "--samples", "3"});
  ASSERT_EQ(o.status, 0) << o.err;
  const auto j = json::parse(o.out);
  ASSERT_EQ(j["samples"].size(), 3U);
  EXPECT_EQ(j["samples"][2]["seed"], 7);
  EXPECT_EQ(j["certified"], true);
  for (const auto& s : j["samples"]) EXPECT_EQ(s["report"]["cycles_after"], 0);
  EXPECT_EQ(call({"girth-sample", "--n", "16", "--k", "6", "--seed", "5", "--samples", "3"}).out, o.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).status, 1);
  EXPECT_EQ(call({"nocommand"}).status, 1);
  EXPECT_EQ(call({"ramsey", "--p", "3"}).status, 1);
  EXPECT_EQ(call({"ramsey", "--forbid", "nonsense", "--p", "3", "--q", "3"}).status, 1);
  EXPECT_EQ(call({"ramsey", "--p", "3", "--q", "3", "--cap", "40"}).status, 1);
  EXPECT_EQ(call({"--format", "xml", "formula", "thm_diamond", "3", "3"}).status, 1);
  EXPECT_EQ(call({"--format", "graph6", "formula", "thm_diamond", "3", "3"}).status, 1);
  EXPECT_EQ(call({"check", "--graph", "B 2 2 zz"}).status, 1);
}

TEST(Cli, ShellExitStatuses) {
  EXPECT_EQ(shell("formula thm_diamond 4 5").status, 0);
  EXPECT_EQ(shell("ramsey --forbid nonsense --p 3 --q 3").status, 1);
  EXPECT_EQ(shell("").status, 1);
  EXPECT_EQ(shell("construct thm_2k2_diamond 6 3").status, 2);
  EXPECT_EQ(shell("--help").status, 0);
}

TEST(Cli, HelpListsIds) {
  for (const char* sub : {"ramsey", "formula", "crosscheck", "construct", "check", "decompose", "find-hom", "verify-lemma",
                          "girth-sample", "enumerate"}) {
    const auto o = call({sub, "--help"});
    EXPECT_EQ(o.status, 0) << sub;
    const std::string text = o.out + o.err;
    for (const auto& id : theorem_ids()) EXPECT_NE(text.find(id), std::string::npos) << sub << " " << id;
    for (const auto& id : lemma_ids()) EXPECT_NE(text.find(id), std::string::npos) << sub << " " << id;
  }
}

TEST(Cli, TextFormat) {
  const auto o = call({"--format", "text", "formula", "thm_diamond", "4", "5"});
  ASSERT_EQ(o.status, 0);
  EXPECT_NE(o.out.find("value: 10"), std::string::npos) << o.out;
  EXPECT_EQ(o.out.find('{'), std::string::npos);
}

TEST(Cli, JobsDoNotChangeOutput) {
  const std::vector<std::string> args{"crosscheck", "thm_claw_coclaw", "--a", "3..4", "--b", "3..3", "--cap", "9"};
  auto one = args, four = args;
  one.insert(one.begin(), {"--jobs", "1"});
  four.insert(four.begin(), {"--jobs", "4"});
  const auto x = call(one), y = call(four);
  ASSERT_EQ(x.status, 0) << x.err;
  EXPECT_EQ(x.out, y.out);
  EXPECT_EQ(call({"--jobs", "0", "formula", "thm_diamond", "3", "3"}).status, 1);
}

TEST(Cli, CacheServesIdenticalBytes) {
  const auto dir = scratch("hits");
  const std::vector<std::string> args{"--cache-dir", dir.string(), "ramsey", "--forbid", "claw,co-claw", "--p", "3", "--q", "4", "--cap", "9"};
  const auto first = call(args);
  ASSERT_EQ(first.status, 0) << first.err;
  std::size_t files = 0;
  for (const auto& f : fs::directory_iterator(dir)) files += f.path().extension() == ".json";
  EXPECT_EQ(files, 1U);
  const auto second = call(args);
  EXPECT_EQ(second.out, first.out);
  EXPECT_TRUE(second.err.empty()) << second.err;

  // the second run is served from the file: edit the stored value and watch it come back
  for (const auto& f : fs::directory_iterator(dir)) {
    std::ifstream in(f.path());
    auto j = json::parse(in);
    in.close();
    j["report"]["value"] = 99;
    std::ofstream(f.path()) << j.dump();
  }
  EXPECT_EQ(json::parse(call(args).out)["value"], 99);
  fs::remove_all(dir);
}

TEST(Cli, CacheEnvironmentVariable) {
  const auto dir = scratch("env");
  setenv("RAMSEY_CACHE", dir.string().c_str(), 1);
  const auto o = call({"ramsey", "--forbid", "2K2,C4", "--p", "3", "--q", "3", "--cap", "8"});
  unsetenv("RAMSEY_CACHE");
  ASSERT_EQ(o.status, 0) << o.err;
  EXPECT_TRUE(fs::exists(dir));
  EXPECT_FALSE(fs::is_empty(dir));
  fs::remove_all(dir);
}

TEST(Cli, CacheVersionBumpMisses) {
  const auto dir = scratch("version");
  std::ostringstream warn;
  const ClassSpec x({parse_graph_name("2K2"), cycle(4)});
  {
    cli::Cache c(dir, "engine-a", &warn);
    auto e = cli::cached_engine(c);
    e(x, false, 3, 3, 8);
    e(x, false, 3, 3, 8);
    EXPECT_EQ(c.misses(), 1);
    EXPECT_EQ(c.hits(), 1);
  }
  {
    cli::Cache c(dir, "engine-b", &warn);
    auto e = cli::cached_engine(c);
    const auto r = e(x, false, 3, 3, 8);
    EXPECT_EQ(r.value, 6);
    EXPECT_EQ(c.hits(), 0);
    EXPECT_EQ(c.misses(), 1);
  }
  EXPECT_TRUE(warn.str().empty()) << warn.str();
  fs::remove_all(dir);
}

TEST(Cli, CorruptedCacheRecomputesWithWarning) {
  const auto dir = scratch("corrupt");
  const std::vector<std::string> args{"--cache-dir", dir.string(), "ramsey", "--forbid", "2K2,C4", "--p", "3", "--q", "3", "--cap", "8"};
  const auto clean = call(args);
  ASSERT_EQ(clean.status, 0);
  for (const auto& f : fs::directory_iterator(dir)) std::ofstream(f.path()) << "{not json";
  const auto again = call(args);
  EXPECT_EQ(again.status, 0);
  EXPECT_EQ(again.out, clean.out);
  EXPECT_NE(again.err.find("warning: corrupted cache entry"), std::string::npos) << again.err;
  // and the entry was rewritten
  EXPECT_TRUE(call(args).err.empty());
  fs::remove_all(dir);
}

TEST(Cli, UnwritableCacheDegrades) {
  const auto dir = scratch("blocked");
  std::ofstream(dir.string()) << "a file, not a directory";
  const auto o = call({"--cache-dir", dir.string(), "ramsey", "--forbid", "2K2,C4", "--p", "3", "--q", "3", "--cap", "8"});
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(json::parse(o.out)["value"], 6);
  EXPECT_NE(o.err.find("cache disabled"), std::string::npos) << o.err;
  fs::remove(dir);
}

TEST(Cli, SplitList) {
  EXPECT_EQ(cli::split_list("2K2, C4"), (std::vector<std::string>{"2K2", "C4"}));
  EXPECT_EQ(cli::split_list("co-(P2+P3),claw"), (std::vector<std::string>{"co-(P2+P3)", "claw"}));
  EXPECT_TRUE(cli::split_list("").empty());
}
