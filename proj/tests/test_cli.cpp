#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sperner_cli.hpp"

namespace sperner::cli {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(RunConfig c) {
  std::ostringstream out, err;
  const int code = dispatch(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig cmd(std::string command, std::string target = {}) {
  RunConfig c;
  c.command = std::move(command);
  c.target = std::move(target);
  return c;
}

std::string temp_file(const std::string &name, const std::string &body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

TEST(Cli, Table1Text) {
  const Result r = run(cmd("table1"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3   14        -               3       3\n"), std::string::npos) << r.out;
}

TEST(Cli, Table1Csv) {
  RunConfig c = cmd("table1");
  c.format = Format::csv;
  const Result r = run(c);
  EXPECT_EQ(r.out,
            "m,last_set,new_shade,shade_size,lemma_1_9_bound_num,lemma_1_9_bound_den\n"
            "1,34,\"134, 234\",2,5,3\n"
            "2,24,\"124\",3,7,3\n"
            "3,14,\"-\",3,3,1\n"
            "4,23,\"123\",4,11,3\n"
            "5,13,\"-\",4,13,3\n"
            "6,12,\"-\",4,5,1\n");
}

TEST(Cli, VerifyTheorem14Json) {
  RunConfig c = cmd("verify", "theorem-1.4");
  c.n = 4;
  c.format = Format::json;
  const Result r = run(c);
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["optimum"], 10);
  EXPECT_EQ(j["match"], true);
  EXPECT_EQ(j["reduced_by_isomorphism"], true);
  EXPECT_EQ(j["counts"]["optimal_unordered"], 1);
}

TEST(Cli, VerifyOutputIndependentOfWorkers) {
  RunConfig c = cmd("verify", "theorem-1.5");
  c.n = 5;
  c.format = Format::json;
  c.workers = 1;
  const Result a = run(c);
  c.workers = 3;
  const Result b = run(c);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, 0);
}

TEST(Cli, VerifyParityAndLongGuard) {
  RunConfig c = cmd("verify", "theorem-1.5");
  c.n = 4;
  EXPECT_EQ(run(c).code, 2);
  c.target = "theorem-1.6";
  c.n = 5;
  EXPECT_EQ(run(c).code, 2);
  c.target = "theorem-1.4";
  c.n = 6;
  const Result r = run(c);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--long"), std::string::npos);
  c.n = 0;
  EXPECT_EQ(run(c).code, 2);
}

TEST(Cli, BudgetExhaustedExitsThree) {
  RunConfig c = cmd("verify", "theorem-1.4");
  c.n = 5;
  c.budget_seconds = 1e-9;
  c.format = Format::json;
  const Result r = run(c);
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(nlohmann::json::parse(r.out)["complete"], false);
}

TEST(Cli, LemmasCheck) {
  RunConfig c = cmd("lemmas", "check");
  c.lemma_id = "3.13";
  c.max = 20;
  const Result r = run(c);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3.13   PASS"), std::string::npos) << r.out;
  c.lemma_id = "9.9";
  EXPECT_EQ(run(c).code, 2);
  c.lemma_id = "3.6";
  c.max = 500;
  EXPECT_EQ(run(c).code, 2);
}

TEST(Cli, OrderList) {
  RunConfig c = cmd("order", "list");
  c.n = 5;
  c.k = 3;
  c.first = 2;
  EXPECT_EQ(run(c).out, "{1,2,3}\n{1,2,4}\n");
  c.first = -1;
  c.last = 1;
  EXPECT_EQ(run(c).out, "{3,4,5}\n");
  c.last = 11;
  EXPECT_EQ(run(c).code, 2);
  c.last = -1;
  c.k = 6;
  EXPECT_EQ(run(c).code, 2);
}

TEST(Cli, Cascade) {
  RunConfig c = cmd("cascade");
  c.m = 5;
  c.k = 3;
  EXPECT_EQ(run(c).out, "5 = C(4,3)+C(2,2)\nshadow bound = 8\n");
  c.m = 0;
  EXPECT_EQ(run(c).code, 2);
}

TEST(Cli, ShadowAndShadeFromFile) {
  RunConfig c = cmd("shade");
  c.family_path = temp_file("last_one.txt", "n=4\n34\n");
  EXPECT_EQ(run(c).out, "# shade of 1 sets: 2 sets\nn=4\n{1,3,4}\n{2,3,4}\n");
  c.command = "new-shade";
  c.family_path = temp_file("third.txt", "n=4\n{1,4}\n");
  EXPECT_EQ(run(c).out, "# new-shade of 1 sets: 0 sets\nn=4\n");
  c.command = "shadow";
  c.family_path = temp_file("mixed.txt", "n=4\n1\n23\n");
  EXPECT_EQ(run(c).code, 2);
  c.family_path = "/nonexistent.txt";
  EXPECT_EQ(run(c).code, 2);
}

TEST(Cli, NormalizeSuccessAndValidation) {
  RunConfig c = cmd("normalize");
  c.family_path = temp_file("single.txt", "n=4\n{1}\n");
  const Result r = run(c);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "step 1: up from rank 1: removed {1}; inserted {1,2}\nfinal: {{1,2}}\n");
  c.family_path = temp_file("chain.txt", "n=4\n1\n12\n");
  EXPECT_EQ(run(c).code, 2);
  c.family_path = temp_file("p1.txt", "n=4\n12\n");
  c.partner_path = temp_file("p2.txt", "n=4\n34\n");
  EXPECT_EQ(run(c).code, 2);
}

TEST(Cli, Sweeps) {
  RunConfig c = cmd("sweep", "lemma-3.14");
  c.max_n = 8;
  EXPECT_EQ(run(c).code, 0);
  c.target = "lemma-3.8";
  c.max_n = 9;
  EXPECT_EQ(run(c).code, 0);
  c.max_n = 21;
  EXPECT_EQ(run(c).code, 2);
  c.target = "normalization";
  c.max_n = 0;
  c.n = 3;
  c.format = Format::json;
  const Result r = run(c);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["selection_failures"], 0);
  c.target = "bogus";
  EXPECT_EQ(run(c).code, 2);
}

TEST(Cli, VerifyLemma315) {
  RunConfig c = cmd("verify", "lemma-3.15");
  c.format = Format::json;
  const Result r = run(c);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["extremal_classes"].size(), 4u);
}

TEST(Cli, UnknownCommandAndWorkers) {
  EXPECT_EQ(run(cmd("frobnicate")).code, 2);
  RunConfig c = cmd("table1");
  c.workers = 0;
  EXPECT_EQ(run(c).code, 2);
}

}  // namespace
}  // namespace sperner::cli
