#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cli_harness.hpp"

using d5::Json;

TEST(Cli, EnumerateJson) {
    auto const r = run_cli_args({"enumerate", "--l", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto const j = Json::parse(r.out);
    EXPECT_EQ(j["count"], 16);
    EXPECT_EQ(j["elements"].size(), 16u);
    int minimal = 0;
    for (auto const& e : j["elements"]) minimal += e["minimal"].get<bool>();
    EXPECT_EQ(minimal, 4);
}

TEST(Cli, EnumerateTextFlagsMinimalElements) {
    auto const r = run_cli_args({"enumerate", "--l", "1", "--format", "text"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1,0,0,0,0|1,0,0,0,0|1,0,0,0,0|1,0,0,0,0|1,0,0,0,0  min"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli_args({"enumerate", "--l", "9"}).code, 2);
    EXPECT_EQ(run_cli_args({"enumerate", "--l", "1", "--format", "dot"}).code, 2);
    EXPECT_EQ(run_cli_args({"graph", "--l", "4"}).code, 2);
    EXPECT_EQ(run_cli_args({"verify", "nonsense"}).code, 2);
    EXPECT_EQ(run_cli_args({"verify", "iso", "--samples", "0"}).code, 2);
    EXPECT_EQ(run_cli_args({}).code, 2);
    EXPECT_EQ(run_cli_args({"bogus"}).code, 2);
    EXPECT_EQ(run_cli_args({"omega"}).code, 2);
    EXPECT_EQ(run_cli_args({"preimage", "--x", "1", "2"}).code, 2);
    EXPECT_EQ(run_cli_args({"omega", "--element", "{not json"}).code, 2);
    EXPECT_EQ(run_cli_args({"--help"}).code, 0);
}

TEST(Cli, Tropicalize) {
    EXPECT_EQ(run_cli_args({"tropicalize", "x*y"}).out, "x + y\n");
    EXPECT_EQ(run_cli_args({"tropicalize", "x + y"}).out, "max(x, y)\n");
    auto const bad = run_cli_args({"tropicalize", "x -"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("parse error"), std::string::npos);
    auto const j = Json::parse(run_cli_args({"tropicalize", "x/(y+1)", "--format", "json"}).out);
    EXPECT_EQ(j["tropical"], "x - max(y, 0)");
}

TEST(Cli, GraphDot) {
    auto const r = run_cli_args({"graph", "--l", "1"});
    ASSERT_EQ(r.code, 0);
    std::size_t nodes = 0;
    for (std::size_t p = r.out.find("[label=\"", 0); p != std::string::npos; p = r.out.find("[label=\"", p + 1))
        if (r.out.compare(p + 8, 2, "k=") != 0) ++nodes;
    EXPECT_EQ(nodes, 16u);
    EXPECT_EQ(r.out, run_cli_args({"graph", "--l", "1"}).out);
    auto const j = Json::parse(run_cli_args({"graph", "--l", "1", "--format", "json"}).out);
    for (auto const& v : j["vertices"]) EXPECT_EQ(d5::to_json(d5::element_from_json(v)), v);
}

TEST(Cli, VerifySuites) {
    EXPECT_EQ(run_cli_args({"verify", "geometric", "--samples", "100", "--seed", "42"}).code, 0);
    auto const iso = run_cli_args({"verify", "iso", "--samples", "10000", "--box", "8", "--seed", "7"});
    EXPECT_EQ(iso.code, 0);
    auto const j = Json::parse(iso.out);
    EXPECT_EQ(j["seed"], 7);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_EQ(run_cli_args({"verify", "ud-match", "--samples", "10000", "--box", "5"}).code, 0);
    EXPECT_EQ(run_cli_args({"verify", "perfect", "--l", "2"}).code, 0);
    EXPECT_EQ(run_cli_args({"verify", "coherent", "--samples", "500", "--format", "text"}).code, 0);
}

TEST(Cli, PreimageAndOmega) {
    auto const r = run_cli_args({"preimage", "--x", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto const j = Json::parse(r.out);
    EXPECT_EQ(j["l"], 1);
    EXPECT_EQ(j["a"], Json::parse("[1,0,0,0,0,0]"));

    auto const o = Json::parse(run_cli_args({"omega", "--x", "1", "2", "3", "-1", "0", "4", "2", "-2", "1", "0"}).out);
    auto const back = run_cli_args({"omega", "--element", o["element"].dump()});
    ASSERT_EQ(back.code, 0) << back.err;
    EXPECT_EQ(Json::parse(back.out)["x"], o["x"]);
    auto const pre = run_cli_args({"preimage", "--element", o["element"].dump(), "--format", "text"});
    EXPECT_EQ(pre.code, 0);
    EXPECT_NE(pre.out.find("l = "), std::string::npos);
}

TEST(Cli, OutFile) {
    auto const path = (std::filesystem::temp_directory_path() / "d5crystal_cli_test.dot").string();
    auto const r = run_cli_args({"graph", "--l", "1", "--out", path});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::string content((std::istreambuf_iterator<char>(f)), {});
    EXPECT_EQ(content, run_cli_args({"graph", "--l", "1"}).out);
    std::remove(path.c_str());
}
