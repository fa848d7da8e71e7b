#include <sstream>

#include <gtest/gtest.h>

#include "artin/cli.hpp"

using json = nlohmann::json;

namespace {

  std::string data(std::string const& name) {
    return std::string(ARTIN_TEST_DATA) + "/" + name;
  }

  struct Result {
    int                code;
    json               report;  // last line
    std::vector<json>  lines;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out;
    int                code = artin::cli::run(std::move(args), out);
    std::istringstream in(out.str());
    Result             r{code, {}, {}};
    for (std::string line; std::getline(in, line);) {
      r.lines.push_back(json::parse(line));
    }
    if (!r.lines.empty()) {
      r.report = r.lines.back();
    }
    return r;
  }

}  // namespace

TEST(Cli, SplitPasses) {
  auto r = run({"split", "--m", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["report"]["rank_Xquarter"], 7);
  EXPECT_EQ(r.report["report"]["green_count"], 3);
  EXPECT_TRUE(r.report["pass"].get<bool>());
  EXPECT_EQ(r.report["exit_code"], 0);
  EXPECT_TRUE(r.report.contains("elapsed_ms"));
}

TEST(Cli, SplitFromComplexFile) {
  auto r = run({"split", "--complex", data("complex_hanham3.json")});
  EXPECT_EQ(r.code, 0) << r.report.dump();
  EXPECT_EQ(r.report["report"]["rank_Xhalf"], 4);
  auto bad = run({"split", "--complex", data("odd_complex.json")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.report["kind"], "input");
}

TEST(Cli, Perfect) {
  auto r = run({"perfect", "3", "3", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(r.report["perfect"].get<bool>());
  EXPECT_EQ(r.report["witness"], "1-t+t^2");
  auto g = run({"perfect", "--grid", "4"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.lines.size(), 28u);
  EXPECT_EQ(g.report["agree_with_coprimality"], 27);
  EXPECT_EQ(run({"perfect", "1", "3", "3"}).code, 2);
}

TEST(Cli, H1Cover) {
  auto r = run({"h1-cover", "2", "4", "4", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["h1"]["description"], "Z/2 + Z^3");
  EXPECT_TRUE(r.report["consistent"].get<bool>());
}

TEST(Cli, Rewrite) {
  auto r = run({"rewrite", "--word", "abAB"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["rewritten"], "s_{1,b} s_{0,b}^-1");
  EXPECT_TRUE(r.report["expansion_matches"].get<bool>());
  EXPECT_EQ(run({"rs", "rewrite", "--word", "ab"}).code, 2);
  auto c = run({"rs", "cover", "2", "3", "7", "--n", "2"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.report["cover"]["generators"].size(), 5u);
  EXPECT_EQ(c.report["abelianization"]["description"], "Z");
}

TEST(Cli, Fold) {
  auto r = run({"fold", data("unfolded.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["folds"], 2);
  EXPECT_EQ(r.report["betti"], 1);
  auto s = run({"fold", data("unfolded.json"), "--seed", "7"});
  EXPECT_EQ(s.report["graph"]["edges"].size(), 2u);
  auto broken = run({"fold", data("broken.json")});
  EXPECT_EQ(broken.code, 2);
  EXPECT_EQ(run({"fold", data("missing.json")}).code, 2);
}

TEST(Cli, Oppressive) {
  auto r = run({"oppressive", data("two_vertex.json"), data("rose_ab.json")});
  EXPECT_EQ(r.code, 0) << r.report.dump();
  EXPECT_EQ(r.report["words"], json::array({"ab^-1", "ba^-1"}));
  auto m = run({"oppressive", "--morphism", data("two_vertex_morphism.json")});
  EXPECT_EQ(m.report["count"], 2);
  auto single = run({"oppressive", data("rose_ab.json"), data("rose_ab.json")});
  EXPECT_EQ(single.report["count"], 0);
}

TEST(Cli, Separate) {
  auto r = run({"separate", data("s3_hom.json"), data("subgroup_ab.json"), data("words_a.json")});
  EXPECT_EQ(r.code, 0) << r.report.dump();
  EXPECT_TRUE(r.report["separates"].get<bool>());
  auto f = run({"separate", data("s3_hom.json"), data("subgroup_ab.json"), data("words_ba.json")});
  EXPECT_FALSE(f.report["separates"].get<bool>());
}

TEST(Cli, Bass) {
  auto e = run({"bass", "verify-epi", "--k", "2"});
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(e.report["pass"].get<bool>());
  EXPECT_EQ(run({"bass", "verify-dihedral", "--m", "2"}).code, 0);
  auto bad = run({"bass", "verify-dihedral", "--m", "2", "--corrupt"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(bad.report["relator_trivial"].get<bool>());
}

TEST(Cli, HanhamCheck) {
  auto r = run({"hanham-check", "--m", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["maps"]["phi"].size(), 3u);
  EXPECT_EQ(r.report["maps"]["psi"].size(), 6u);
  auto starved = run({"--budget-nodes", "1", "--budget-depth", "1", "hanham-check", "--m", "3"});
  EXPECT_EQ(starved.code, 1);
}

TEST(Cli, UsageErrors) {
  auto r = run({"split"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.report.contains("error"));
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"split", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"bass", "verify-epi", "--k", "0"}).code, 2);
}
