#include "satedge/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace satedge;

namespace {

struct Outcome {
    int code = -1;
    std::string out, err;
};

Outcome run(std::vector<std::string> args, const std::string& input = {}) {
    args.insert(args.begin(), "satedge");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    Outcome r;
    r.code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(Cli, ConstructThenCount) {
    Outcome c = run({"construct", "h1", "--p", "3", "--x", "1", "--y", "0"});
    ASSERT_EQ(c.code, 0) << c.err;
    Outcome n = run({"count", "--p", "4", "--format", "text"}, c.out);
    ASSERT_EQ(n.code, 0) << n.err;
    EXPECT_EQ(n.out, "246\n");
    Outcome j = run({"count", "--p", "4"}, c.out);
    EXPECT_EQ(nlohmann::json::parse(j.out)["total"], 246);
}

TEST(Cli, ConstructFormats) {
    Outcome j = run({"construct", "h1", "--p", "3", "--x", "1", "--y", "2", "--format", "json"});
    ASSERT_EQ(j.code, 0) << j.err;
    auto doc = nlohmann::json::parse(j.out);
    EXPECT_EQ(doc["n"], 68);
    EXPECT_EQ(doc["e"], 1156);
    EXPECT_EQ(doc["parts"].size(), 5u);
    Outcome e = run({"construct", "turan", "--p", "3", "--n", "6", "--format", "edgelist"});
    ASSERT_EQ(e.code, 0);
    EXPECT_EQ(e.out.substr(0, 4), "6 9\n");
    Outcome t = run({"construct", "h2", "--p", "3", "--x", "2", "--y", "0", "--trim-to-jump", "--format", "json"});
    ASSERT_EQ(t.code, 0) << t.err;
    EXPECT_EQ(nlohmann::json::parse(t.out)["e"], turan_number(132, 3) + 1);
}

TEST(Cli, PackAnalyze) {
    Outcome c = run({"construct", "h1", "--p", "3"});
    Outcome p = run({"pack", "--p", "3", "--analyze"}, c.out);
    ASSERT_EQ(p.code, 0) << p.err;
    auto doc = nlohmann::json::parse(p.out);
    EXPECT_EQ(doc["cliques"].size(), 4u);
    EXPECT_EQ(doc["ell1"], 114);
    EXPECT_EQ(doc["ell2"], 132);
    EXPECT_EQ(doc["remainder_edges"], 729);
}

TEST(Cli, SearchExitCodes) {
    Outcome ok = run({"search", "--n", "6", "--e", "9", "--p", "4"});
    ASSERT_EQ(ok.code, 0) << ok.err;
    EXPECT_EQ(nlohmann::json::parse(ok.out)["minimum"], 0);
    Outcome jump = run({"search", "--n", "7", "--p", "3", "--jump", "--no-witnesses"});
    EXPECT_EQ(nlohmann::json::parse(jump.out)["minimum"], 2);
    EXPECT_TRUE(nlohmann::json::parse(jump.out)["witnesses"].empty());
    EXPECT_EQ(run({"search", "--n", "8", "--e", "10", "--p", "4", "--budget", "5"}).code, 3);
    EXPECT_EQ(run({"search", "--n", "5", "--e", "11", "--p", "4"}).code, 1);
    EXPECT_EQ(run({"search", "--n", "6", "--p", "4"}).code, 2);
    EXPECT_EQ(run({"search", "--n", "6", "--p", "3", "--e", "3", "--jump"}).code, 2);
}

TEST(Cli, FormulasTable) {
    Outcome t = run({"formulas", "table", "--p-max", "4"});
    ASSERT_EQ(t.code, 0);
    std::istringstream lines(t.out);
    std::string header, row3;
    std::getline(lines, header);
    std::getline(lines, row3);
    EXPECT_EQ(header, "p,modulus,main_term,linear_term,bracket_lower,bracket_upper,ell1_threshold,ell2_threshold,f,g");
    EXPECT_EQ(row3, "3,66,2/33,3/11,-3/11,-7/33,2/11,1/360,7/10,4");
    Outcome e = run({"formulas", "eval", "--n", "66", "--p", "3", "--r", "2/33"});
    auto doc = nlohmann::json::parse(e.out);
    EXPECT_EQ(doc["divisible_minimum"], "246");
    EXPECT_EQ(doc["r_star_edges"], "78");
    EXPECT_EQ(doc["quadratic_identity"], true);
    Outcome s = run({"formulas", "sweep", "--p-max", "1000"});
    EXPECT_EQ(s.code, 0);
}

TEST(Cli, VerifySectionsAndThreadInvariance) {
    Outcome one = run({"--threads", "1", "verify", "--no-timing"});
    Outcome eight = run({"--threads", "8", "verify", "--no-timing"});
    ASSERT_EQ(one.code, 0) << one.out;
    EXPECT_EQ(one.out, eight.out);
    Outcome csv = run({"verify", "formulas", "--format", "csv", "--no-timing"});
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out.substr(0, 3), "id,");
    Outcome c = run({"construct", "h2", "--p", "3"});
    EXPECT_EQ(run({"verify", "reduction", "--in", "-", "--p", "3"}, c.out).code, 0);
    EXPECT_EQ(run({"verify", "packing"}).code, 2);
}

TEST(Cli, UsageAndInputErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"count"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"count", "--p", "3"}, "not a graph\x01").code, 2);
    EXPECT_EQ(run({"count", "--p", "3", "--in", "/nonexistent/file"}).code, 2);
    EXPECT_EQ(run({"construct", "h1", "--p", "3", "--y", "31"}).code, 2);
    EXPECT_EQ(run({"count", "--p", "3"}, "Bw\n").code, 1);  // triangle contains K3
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VertexCapAndConfig) {
    Outcome c = run({"construct", "h1", "--p", "3"});
    EXPECT_EQ(run({"--vertex-cap", "10", "count", "--p", "4"}, c.out).code, 2);
    std::string good = temp_file("satedge_good.cfg", "# settings\nthreads = 2\nformat = text\n");
    Outcome n = run({"--config", good, "count", "--p", "4"}, c.out);
    EXPECT_EQ(n.code, 0) << n.err;
    EXPECT_EQ(n.out, "246\n");
    std::string bad = temp_file("satedge_bad.cfg", "colour = blue\n");
    Outcome b = run({"--config", bad, "count", "--p", "4"}, c.out);
    EXPECT_EQ(b.code, 2);
    EXPECT_NE(b.err.find("unknown key"), std::string::npos);
    std::string junk = temp_file("satedge_junk.cfg", "threads = many\n");
    EXPECT_EQ(run({"--config", junk, "count", "--p", "4"}, c.out).code, 2);
    std::remove(good.c_str());
    std::remove(bad.c_str());
    std::remove(junk.c_str());
    set_vertex_cap(SATEDGE_DEFAULT_VERTEX_CAP);
}

TEST(Config, ParsesKeysAndRejectsUnknowns) {
    std::istringstream in("threads=3\npacking_budget = 10\nsearch_budget=20 # inline\nvertex_cap=100\nformat=csv\nemit_witnesses=false\n\n");
    Config c = parse_config(in);
    EXPECT_EQ(c.threads, 3u);
    EXPECT_EQ(c.packing_budget, 10u);
    EXPECT_EQ(c.search_budget, 20u);
    EXPECT_EQ(c.vertex_cap, 100u);
    EXPECT_EQ(c.format, OutputFormat::csv);
    EXPECT_FALSE(c.emit_witnesses);
    std::istringstream missing_eq("threads 3\n");
    EXPECT_THROW(parse_config(missing_eq), invalid_argument);
    std::istringstream zero_cap("vertex_cap = 0\n");
    EXPECT_THROW(parse_config(zero_cap), invalid_argument);
    EXPECT_THROW(parse_output_format("xml"), invalid_argument);
}
