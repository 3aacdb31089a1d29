#include "lvcomp/cli.hpp"
#include "lvcomp/io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lvcomp;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("lvcomp_test_" + name);
}

}  // namespace

TEST(Cli, ClassifyJsonWithSerial) {
    const CliRun r = run({"classify", "--b", "3,4", "--a", "1,1,1,2", "--json", "--table6"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["sign_triple"], "(+,+,-)");
    EXPECT_EQ(j["table6"]["serial"], 1);
    EXPECT_EQ(j["table6"]["portrait"], "1a");
    EXPECT_EQ(j["determinants"]["d122"], "-2");
    ASSERT_EQ(j["equilibria"].size(), 4u);
    EXPECT_EQ(j["equilibria"][3]["point"], Json::array({"2", "1"}));
    EXPECT_EQ(j["equilibria"][3]["full"]["label"], "AS");
}

TEST(Cli, ClassifyTextMentionsSerial) {
    const CliRun r = run({"classify", "--figure", "5", "--table6"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("9"), std::string::npos);
    EXPECT_NE(r.out.find("NI"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::string> args{"classify", "--figure", "2b", "--json"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> sweep{"sweep", "--figure", "1a", "--to-figure", "2a", "--json"};
    EXPECT_EQ(run(sweep).out, run(sweep).out);
}

TEST(Cli, InputFileRoundTrip) {
    const auto path = temp_file("params.json");
    {
        std::ofstream f(path);
        f << R"({"b": ["2", 4], "a": [[1, "1"], [1, 2.0]]})";
    }
    const CliRun r = run({"classify", "--input", path.string(), "--json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["sign_triple"], "(+,+,0)");
    const SystemParams p = params_from_json(to_json(*reference_params("3a")));
    EXPECT_EQ(p, *reference_params("3a"));
    std::filesystem::remove(path);
}

TEST(Cli, DecimalInputsAreExact) {
    const CliRun r = run({"classify", "--b", "0.3,0.4", "--a", "0.1,0.1,0.1,0.2", "--json"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(Json::parse(r.out)["sign_triple"], "(+,+,-)");
}

TEST(Cli, InvalidInputExitsTwoWithJsonError) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"classify", "--b", "0,4", "--a", "1,1,1,2"},
             {"classify", "--b", "3", "--a", "1,1,1,2"},
             {"classify", "--b", "x,4", "--a", "1,1,1,2"},
             {"classify", "--figure", "7z"},
             {"classify"},
             {"simulate", "--figure", "1a", "--horizon", "-1"},
             {"bogus"},
             {"classify", "--input", "/nonexistent/file.json"}}) {
        const CliRun r = run(args);
        EXPECT_EQ(r.code, kExitInputError) << args[0] << " " << (args.size() > 1 ? args[1] : "");
        ASSERT_FALSE(r.err.empty());
        const Json j = Json::parse(r.err);
        EXPECT_EQ(j["error"], "invalid-input");
        EXPECT_TRUE(j.contains("message"));
    }
}

TEST(Cli, EquilibriaPlaneScopeAddsOffQuadrantPoint) {
    const CliRun quad = run({"equilibria", "--figure", "1b", "--json"});
    const CliRun plane = run({"equilibria", "--figure", "1b", "--json", "--scope", "plane"});
    ASSERT_EQ(plane.code, kExitOk);
    EXPECT_EQ(Json::parse(quad.out)["equilibria"].size() + 1, Json::parse(plane.out)["equilibria"].size());
}

TEST(Cli, NullclinesJson) {
    const CliRun r = run({"nullclines", "--figure", "3a", "--json"});
    ASSERT_EQ(r.code, kExitOk);
    const Json j = Json::parse(r.out);
    ASSERT_EQ(j["x1_nullclines"].size(), 2u);
    bool up = false;
    for (const auto& seg : j["x1_nullclines"][1]["segments"]) {
        if (seg["from"] == "0" && seg["to"] == "2") up = seg["direction"] == "up";
    }
    EXPECT_TRUE(up);
}

TEST(Cli, SimulateWritesCsv) {
    const CliRun r = run({"simulate", "--figure", "1a", "--start", "0.5,3", "--horizon", "50"});
    ASSERT_EQ(r.code, kExitOk);
    std::istringstream in(r.out);
    std::string line, last;
    std::getline(in, line);
    EXPECT_EQ(line, "t,x1,x2");
    int rows = 0;
    while (std::getline(in, line)) {
        last = line;
        ++rows;
    }
    EXPECT_GT(rows, 10);
    double t, x1, x2;
    ASSERT_EQ(std::sscanf(last.c_str(), "%lf,%lf,%lf", &t, &x1, &x2), 3);
    EXPECT_NEAR(x1, 2.0, 1e-5);
    EXPECT_NEAR(x2, 1.0, 1e-5);
    EXPECT_NE(r.err.find("status"), std::string::npos);
}

TEST(Cli, SimulateFromRestGivesOneRow) {
    const CliRun r = run({"simulate", "--figure", "1a", "--start", "0,0"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "t,x1,x2\n0,0,0\n");
}

TEST(Cli, PortraitSvgColours) {
    const auto path = temp_file("portrait.svg");
    const CliRun r = run({"portrait", "--figure", "1a", "--seeds", "3", "--arrows", "4", "--out", path.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::ifstream f(path);
    const std::string svg((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("data-x=\"2\" data-y=\"1\" data-verdict=\"stable-node\""), std::string::npos) << svg.substr(0, 400);
    EXPECT_NE(svg.find("fill=\"red\""), std::string::npos);
    EXPECT_NE(svg.find("class=\"nullcline\""), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    std::filesystem::remove(path);

    const CliRun line = run({"portrait", "--figure", "5", "--seeds", "0", "--arrows", "0"});
    EXPECT_NE(line.out.find("equilibrium-line"), std::string::npos);
    EXPECT_NE(line.out.find("fill=\"pink\""), std::string::npos);
    const CliRun semi = run({"portrait", "--figure", "3a", "--seeds", "0", "--arrows", "0"});
    EXPECT_NE(semi.out.find("fill=\"orange\""), std::string::npos);
}

TEST(Cli, SweepReportsTranscritical) {
    const CliRun r = run({"sweep", "--figure", "1a", "--to-figure", "1b", "--json", "--steps", "4"});
    ASSERT_EQ(r.code, kExitOk);
    const Json j = Json::parse(r.out);
    ASSERT_EQ(j["events"].size(), 1u);
    EXPECT_EQ(j["events"][0]["s_star"]["exact"], "1/2");
    EXPECT_EQ(j["events"][0]["kind"], "transcritical");
    EXPECT_EQ(j["events"][0]["determinant"], "d122");
    EXPECT_EQ(j["samples"].size(), 5u);
    const CliRun missing = run({"sweep", "--figure", "1a"});
    EXPECT_EQ(missing.code, kExitInputError);
}

TEST(Cli, VerifySingleFigure) {
    const CliRun r = run({"verify", "--figure", "2b", "--json"});
    EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
}
