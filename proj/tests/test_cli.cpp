#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "mutwb/mutwb.hpp"

using namespace mutwb;
using io::json;

namespace {

struct Result {
  int code;
  std::string out;
};

// One store per test so that tests can run in parallel.
std::string store_path() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  return (std::filesystem::temp_directory_path() /
          ("mutwb_cli_" + std::string(info->name()) + ".json"))
      .string();
}

Result mw(const std::string& args) {
  const std::string cmd = "MW_STORE='" + store_path() + "' '" MW_BINARY "' " +
                          args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return {-1, {}};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe))
    out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) {
  return std::string("'") + MW_DATA_DIR + "/" + name + "'";
}

json golden(const std::string& name) {
  std::ifstream in(std::string(MW_GOLDEN_DIR) + "/" + name);
  return json::parse(in);
}

std::string write_temp(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return "'" + p.string() + "'";
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override { std::filesystem::remove(store_path()); }
  void TearDown() override { std::filesystem::remove(store_path()); }
};

} // namespace

TEST_F(Cli, MutateTriangle) {
  Result r = mw("mutate --input " + data("triangle3.json") + " --word 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(io::multiquiver_from_json(json::parse(r.out)),
            io::multiquiver_from_json(golden("triangle336.json")));
}

TEST_F(Cli, MutateEmptyAndRepeatedWord) {
  Result a = mw("mutate --input " + data("triangle3.json"));
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(json::parse(a.out), io::to_json(io::multiquiver_from_json(
                                    json::parse(R"({"n":3,"arrows":[[1,2,3],[2,3,3],[3,1,3]]})"))));
  Result b = mw("mutate --input " + data("triangle3.json") + " --word 2 2");
  EXPECT_EQ(b.out, a.out);
  Result m = mw("mutate --input " + data("rank2.json") + " --word 1");
  ASSERT_EQ(m.code, 0);
  EXPECT_EQ(json::parse(m.out), json::parse(R"({"n":2,"b":[[0,-1],[1,0]]})"));
}

TEST_F(Cli, MutateDot) {
  Result r = mw("mutate --input " + data("triangle3.json") + " --word 1 --dot");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3 -> 2 [label=\"6\"]"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(mw("mutate --input " + data("triangle3.json") + " --word 4").code, 3);
  EXPECT_EQ(mw("mutate --input " + write_temp("mw_bad.json", "{not json") + " --word 1").code, 2);
  EXPECT_EQ(mw("mutate --input /nonexistent/file.json").code, 2);
  EXPECT_EQ(mw("mutate --input " +
                write_temp("mw_nonskew.json", R"({"n":2,"b":[[0,1],[1,0]]})"))
                .code,
            2);
  EXPECT_EQ(mw("frobnicate").code, 2);
  EXPECT_EQ(mw("closure --input " + data("triangle3.json") + " --depth 10 --cap 5").code, 4);
  EXPECT_EQ(mw("mckay --order 0 --weights 1").code, 3);
  EXPECT_EQ(mw("markov tree --triple 1 2 3 --depth 2").code, 3);
  EXPECT_EQ(mw("weyl length --diagram " +
                write_temp("mw_baddiag.json", R"({"n":2,"edges":[[1,2,1,4]]})") +
                " --word 1")
                .code,
            3);
  EXPECT_EQ(mw("--help").code, 0);
}

TEST_F(Cli, Seed) {
  Result r = mw("seed --input " + data("rank2.json") + " --word 1");
  ASSERT_EQ(r.code, 0);
  Seed s = io::seed_from_json(json::parse(r.out));
  LaurentPoly expected(2);
  expected.add_term({-1, 0}, 1);
  expected.add_term({-1, 1}, 1);
  EXPECT_EQ(s.cluster[0], expected);
  Result back = mw("seed --input " + data("rank2.json") + " --word 1 2 1 2 1 2 1 2 1 2");
  EXPECT_EQ(io::seed_from_json(json::parse(back.out)),
            initial_seed(io::exchange_matrix_from_json(json::parse(R"({"n":2,"b":[[0,1],[-1,0]]})"))));
}

TEST_F(Cli, ClosureAndStore) {
  Result r = mw("closure --input " + data("rank2.json") + " --depth 10 --store pent");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j.at("distinct_clusters"), 5);
  EXPECT_EQ(j.at("cluster_variables").size(), 5u);
  SessionStore s(store_path());
  EXPECT_EQ(s.entry("pent").type, "exchange_graph");
  Result e = mw("export json --entry pent");
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(json::parse(e.out), j);
  Result d = mw("export dot --entry pent");
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(d.out.rfind("graph exchange {", 0), 0u);
}

TEST_F(Cli, WeylQueries) {
  Result len = mw("weyl length --diagram " + data("a2tilde.json") + " --word 1 2 1");
  ASSERT_EQ(len.code, 0);
  EXPECT_EQ(len.out, "3\n");
  EXPECT_EQ(mw("weyl length --diagram " + data("a2tilde.json") + " --word 1 2 2 1").out, "0\n");

  Result red = mw("weyl reduced --diagram " + data("a2tilde.json") + " --word 2 1 2 3 3");
  ASSERT_EQ(red.code, 0);
  EXPECT_EQ(json::parse(red.out), json::parse(R"({"word":[1,2,1],"length":3})"));

  Result br = mw("weyl bruhat --diagram " + data("a2tilde.json") + " --v 1 --w 2 1");
  EXPECT_EQ(json::parse(br.out), json::parse(R"({"leq":true,"order":"bruhat"})"));
  Result wr = mw("weyl weak --diagram " + data("a2tilde.json") + " --v 1 --w 2 1");
  EXPECT_EQ(json::parse(wr.out), json::parse(R"({"leq":false,"order":"right"})"));
  Result wl = mw("weyl weak --side left --diagram " + data("a2tilde.json") + " --v 1 --w 2 1");
  EXPECT_EQ(json::parse(wl.out), json::parse(R"({"leq":true,"order":"left"})"));
  EXPECT_EQ(mw("weyl bruhat --diagram " + data("a2tilde.json") + " --v 1 --w 1 1").code, 3);
}

TEST_F(Cli, HasseAndTilt) {
  Result h = mw("tilt hasse --diagram " + data("a1tilde.json") + " --depth 4 --store h");
  ASSERT_EQ(h.code, 0);
  json j = json::parse(h.out);
  EXPECT_EQ(j.at("nodes").size(), 9u);
  EXPECT_EQ(j.at("arrows").size(), 8u);
  Result d = mw("export dot --entry h");
  EXPECT_NE(d.out.find("Lambda"), std::string::npos);
  EXPECT_NE(d.out.find("I1I2"), std::string::npos);

  Result w = mw("tilt walk --diagram " + data("a2tilde.json") + " --word 1 2 2");
  ASSERT_EQ(w.code, 0);
  json steps = json::parse(w.out).at("steps");
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[0].at("direction"), "up");
  EXPECT_EQ(steps[1].at("direction"), "up");
  EXPECT_EQ(steps[2].at("direction"), "down");
  EXPECT_EQ(steps[2].at("word"), json::array({1}));

  Result k = mw("tilt k0 --diagram " + data("a1tilde.json") + " --word 1");
  ASSERT_EQ(k.code, 0);
  EXPECT_EQ(json::parse(k.out).at("matrix"), json::parse("[[-1,0],[2,1]]"));
}

TEST_F(Cli, Markov) {
  Result t = mw("markov tree --depth 3");
  ASSERT_EQ(t.code, 0);
  bool found = false;
  const json tree = json::parse(t.out);
  for (const auto& n : tree.at("nodes"))
    for (const auto& x : n.at("triple"))
      found |= x == 87;
  EXPECT_TRUE(found);
  Result s = mw("markov step --triple 3 6 15 --position 3");
  EXPECT_EQ(json::parse(s.out), json::parse(R"({"triple":[3,6,3],"positive":true})"));
  Result dot = mw("markov tree --depth 1 --dot");
  EXPECT_NE(dot.out.find("\"6,3,3\""), std::string::npos);
}

TEST_F(Cli, McKayMatchesGoldens) {
  Result three = mw("mckay --order 3 --weights 1 1 1");
  ASSERT_EQ(three.code, 0);
  EXPECT_EQ(io::multiquiver_from_json(json::parse(three.out)),
            io::multiquiver_from_json(golden("mckay_3_111.json")));
  Result five = mw("mckay --order 5 --weights 1 2 2");
  ASSERT_EQ(five.code, 0);
  EXPECT_EQ(io::multiquiver_from_json(json::parse(five.out)),
            io::multiquiver_from_json(golden("mckay_5_122.json")));
}

TEST_F(Cli, Deterministic) {
  const std::string cmd = "closure --input " + data("triangle3.json") + " --depth 2";
  EXPECT_EQ(mw(cmd).out, mw(cmd).out);
  const std::string h = "weyl hasse --diagram " + data("a2tilde.json") + " --depth 4";
  EXPECT_EQ(mw(h).out, mw(h).out);
}
