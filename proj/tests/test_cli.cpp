#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "support/oracles.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(CLIQUETOP_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("cliquetop_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
        std::ofstream(dir / "g.edges") << oracle::bridged_triangles_edge_list();
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string p(const std::string& name) const { return (dir / name).string(); }

    fs::path dir;
};

} // namespace

TEST_F(Cli, BuildWritesComplexAndSummary) {
    auto r = run("build --input " + p("g.edges") + " --out " + p("o"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("6 vertices, 7 1-simplices, 2 2-simplices"), std::string::npos) << r.out;
    EXPECT_TRUE(fs::exists(dir / "o" / "complex.json"));
}

TEST_F(Cli, ComplexJsonRoundTripIsByteStable) {
    ASSERT_EQ(run("build --input " + p("g.edges") + " --out " + p("a")).code, 0);
    ASSERT_EQ(run("build --input " + p("a/complex.json") + " --out " + p("b")).code, 0);
    EXPECT_EQ(slurp(dir / "a" / "complex.json"), slurp(dir / "b" / "complex.json"));
}

TEST_F(Cli, FiltratePrintsBettiPerThreshold) {
    auto r = run("filtrate --input " + p("g.edges") + " --measure degree --out " + p("o"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("delta=3 [2,0,0]"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("delta=2 [2,2,0]"), std::string::npos);
    EXPECT_NE(r.out.find("delta=0 [1,0,0]"), std::string::npos);
    for (auto ext : {".json", ".csv", ".tsv"}) EXPECT_TRUE(fs::exists(dir / "o" / (std::string("filtration_degree") + ext)));
    EXPECT_EQ(slurp(dir / "o" / "filtration_degree.csv"), "threshold,beta_0,beta_1,beta_2\n3,2,0,0\n2,2,2,0\n0,1,0,0\n");
}

TEST_F(Cli, ExplicitThresholdsAndFormatSelection) {
    auto r = run("filtrate --input " + p("g.edges") + " --measure betweenness --thresholds 0.6,0 --format tsv --out " +
                 p("o"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(fs::exists(dir / "o" / "filtration_betweenness.tsv"));
    EXPECT_FALSE(fs::exists(dir / "o" / "filtration_betweenness.json"));
    EXPECT_NE(r.out.find("delta=0.6 [2,0,0]"), std::string::npos) << r.out;
}

TEST_F(Cli, CentralityAndBetti) {
    auto r = run("centrality --input " + p("g.edges") + " --measure gcc --format csv --out " + p("o"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(slurp(dir / "o" / "scores_gcc.csv").find("[1],0,gcc,1,1\n"), std::string::npos);
    auto b = run("betti --input " + p("g.edges"));
    EXPECT_EQ(b.code, 0);
    EXPECT_NE(b.out.find("[1,0,0]"), std::string::npos) << b.out;
}

TEST_F(Cli, ReportRunsEveryMeasure) {
    auto r = run("report --input " + p("g.edges") + " --out " + p("o"));
    EXPECT_EQ(r.code, 0) << r.out;
    for (auto m : {"degree", "gcc", "betweenness"}) {
        EXPECT_TRUE(fs::exists(dir / "o" / (std::string("filtration_") + m + ".json"))) << m;
        EXPECT_TRUE(fs::exists(dir / "o" / (std::string("scores_") + m + ".csv"))) << m;
    }
}

TEST_F(Cli, AdjacencyExport) {
    auto r = run("adjacency --input " + p("g.edges") + " --level 1 --format csv --out " + p("o"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(fs::exists(dir / "o" / "adjacency_1.csv"));
    EXPECT_EQ(run("adjacency --input " + p("g.edges") + " --level 5").code, 1);
}

TEST_F(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("nonsense").code, 1);
    EXPECT_EQ(run("filtrate --input " + p("g.edges")).code, 1);
    EXPECT_EQ(run("filtrate --input " + p("g.edges") + " --measure closeness").code, 1);
    auto r = run("filtrate --input " + p("g.edges") + " --measure degree --thresholds 0,3");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("decreasing"), std::string::npos) << r.out;
    EXPECT_EQ(run("filtrate --input " + p("g.edges") + " --measure degree --thresholds 1,x").code, 1);
}

TEST_F(Cli, DataErrorsExitTwo) {
    std::ofstream(dir / "empty.edges").close();
    auto r = run("build --input " + p("empty.edges"));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("empty"), std::string::npos) << r.out;
    std::ofstream(dir / "bad.edges") << "1 2\n3\n";
    r = run("build --input " + p("bad.edges"));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;
    EXPECT_EQ(run("build --input " + p("missing.edges")).code, 2);
    std::ofstream(dir / "bad.json") << "{\"labels\":[";
    EXPECT_EQ(run("betti --input " + p("bad.json")).code, 2);
}

TEST_F(Cli, SimplexCapIsADataError) {
    std::ofstream out(dir / "dense.edges");
    for (int u = 0; u < 14; ++u) {
        for (int v = u + 1; v < 14; ++v) out << u << ' ' << v << '\n';
    }
    out.close();
    EXPECT_EQ(run("build --input " + p("dense.edges") + " --max-simplices 1000").code, 2);
    EXPECT_EQ(run("build --input " + p("dense.edges") + " --max-simplices 1000 --max-dim 2 --out " + p("o")).code, 0);
}
