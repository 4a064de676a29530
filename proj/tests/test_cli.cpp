#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"

#include "fqfrieze/cli.hpp"

using fqfrieze::run_cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, EnumerateCatalog) {
  const Outcome r = run({"enumerate", "--field", "2", "--width", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "field: 2\nwidth: 3\ncount: 11\norbits: 4\n"
            "  (0,0,0,0,0,0)  size 1\n"
            "  (0,0,0,1,0,1)  size 6\n"
            "  (0,1,1,0,1,1)  size 3\n"
            "  (1,1,1,1,1,1)  size 1\n");
  const Outcome f4 = run({"enumerate", "--field", "2^2", "--width", "2"});
  EXPECT_EQ(f4.code, 0);
  EXPECT_NE(f4.out.find("count: 17\n"), std::string::npos);
}

TEST(Cli, EnumerateJson) {
  const Outcome r = run({"enumerate", "--field", "3", "--width", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["count"], 10);
  EXPECT_EQ(doc["orbits"].size(), 2U);
  EXPECT_EQ(doc["field"], "3");
}

TEST(Cli, DeterministicAcrossWorkers) {
  for (const char* strategy : {"naive", "mitm"}) {
    const Outcome a = run({"enumerate", "--field", "3", "--width", "4", "--strategy", strategy});
    const Outcome b = run({"enumerate", "--field", "3", "--width", "4", "--strategy", strategy,
                       "--workers", "3"});
    EXPECT_EQ(a.out, b.out);
  }
  const Outcome c = run({"verify", "--field", "3", "--which", "moduli", "--max-n", "5"});
  const Outcome d =
      run({"verify", "--field", "3", "--which", "moduli", "--max-n", "5", "--workers", "4"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, InputErrors) {
  const Outcome r = run({"enumerate", "--field", "4", "--width", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("descriptor"), std::string::npos);
  EXPECT_EQ(run({"enumerate", "--field", "3"}).code, 1);
  EXPECT_EQ(run({"enumerate", "--field", "3", "--width", "2", "--strategy", "x"}).code, 1);
  EXPECT_EQ(run({"enumerate", "--field", "3", "--width", "2", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BudgetExit) {
  const Outcome r = run({"enumerate", "--field", "3^2", "--width", "12", "--budget", "1000"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
  EXPECT_EQ(run({"verify", "--field", "5", "--which", "moduli", "--max-n", "9", "--budget",
                 "1e4"})
                .code,
            2);
}

TEST(Cli, VerifyAllMatch) {
  const Outcome a = run({"verify", "--field", "3", "--which", "friezes", "--max-width", "4"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out.find("MISMATCH"), std::string::npos);
  const Outcome b = run({"verify", "--field", "2", "--which", "partitions", "--max-n", "10"});
  EXPECT_EQ(b.code, 0) << b.err;
  const Outcome c = run({"verify", "--field", "2", "--which", "moduli", "--max-n", "6"});
  EXPECT_EQ(c.code, 0) << c.err;
  const Outcome d = run({"verify", "--field", "2^2", "--max-width", "3", "--max-n", "5",
                     "--format", "json"});
  ASSERT_EQ(d.code, 0) << d.err;
  const auto doc = nlohmann::json::parse(d.out);
  EXPECT_TRUE(doc["all_match"].get<bool>());
  EXPECT_GT(doc["rows"].size(), 10U);
}

TEST(Cli, MapBothDirections) {
  const Outcome a = run({"map", "--field", "2", "--to", "config", "--row", "1,1,1,0,0"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("configuration: ("), std::string::npos);
  EXPECT_NE(a.out.find("round trip: ok"), std::string::npos);

  const Outcome b = run({"map", "--field", "3", "--to", "frieze", "--points", "0,1,inf"});
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.out.find("row: ("), std::string::npos);
  EXPECT_NE(b.out.find("round trip: ok"), std::string::npos);

  const Outcome c = run({"map", "--field", "3", "--to", "frieze", "--points", "0,1,0,1"});
  EXPECT_EQ(c.code, 1);
  EXPECT_NE(c.err.find("not liftable"), std::string::npos);

  const Outcome d = run({"map", "--field", "3", "--to", "config", "--row", "1,1,1,1"});
  EXPECT_EQ(d.code, 1);
  EXPECT_EQ(run({"map", "--field", "3", "--to", "sideways"}).code, 1);
}

TEST(Cli, PrintFrieze) {
  const Outcome a = run({"print", "--field", "2", "--row", "1,1,1,0,0"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "1 1 1 1\n 1 1 1\n  0 0\n   1\n");
  const Outcome b = run({"print", "--field", "2", "--row", "1,1,1,0,0", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(b.out)["width"], 2);
  EXPECT_EQ(run({"print", "--field", "2", "--row", "1,1,0"}).code, 1);
}

TEST(Cli, CountTables) {
  const Outcome a = run({"count", "--q", "2", "--max-width", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("7  171"), std::string::npos);
  const Outcome b = run({"count", "--field", "3", "--which", "moduli", "--max-n", "6", "--format",
                     "json"});
  ASSERT_EQ(b.code, 0);
  const auto doc = nlohmann::json::parse(b.out);
  EXPECT_EQ(doc["moduli"][2]["n"], 4);
  EXPECT_EQ(doc["moduli"][2]["c_n"], 84);
  EXPECT_EQ(doc["moduli"][2]["c_n_plus"], 24);
  EXPECT_EQ(doc["moduli"][2]["c_n_minus"], 60);
  EXPECT_TRUE(doc["moduli"][1]["c_n_plus"].is_null());
  const Outcome big = run({"count", "--q", "1000003", "--max-width", "40", "--format", "json"});
  ASSERT_EQ(big.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(big.out)["friezes"][39]["count"].is_string());
  EXPECT_EQ(run({"count"}).code, 1);
}

TEST(Cli, PartitionTriangle) {
  const Outcome a = run({"partitions", "--max-n", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out,
            "n\\k  2  3  4  5\n"
            "2    1\n"
            "3    0  1\n"
            "4    1  2  1\n"
            "5    0  5  5  1\n");
  const Outcome b = run({"partitions", "--max-n", "4", "--format", "json"});
  const auto doc = nlohmann::json::parse(b.out);
  EXPECT_EQ(doc["rows"][2]["a"], (std::vector<int>{1, 2, 1}));
}
