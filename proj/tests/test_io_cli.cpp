#include "lie/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lie;

namespace {

const std::string kData = LIE_DATA_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
    ~ScopedEnv() { ::unsetenv(name_); }

private:
    const char* name_;
};

}  // namespace

TEST(AlgebraFile, ParsesHeisenberg) {
    const auto g = parse_algebra(read_file(kData + "/heisenberg1.json"));
    EXPECT_EQ(derivations(g).dim(), 6u);
    EXPECT_EQ(g.labels(), (std::vector<std::string>{"x", "y", "c"}));
    EXPECT_EQ(bracket(g, {1, 0, 0}, {0, 1, 0}), (Element{0, 0, 1}));
}

TEST(AlgebraFile, EmptyBracketsIsAbelian) {
    const auto g = parse_algebra(R"({"dim": 4, "brackets": []})");
    EXPECT_EQ(g, abelian(4));
}

TEST(AlgebraFile, RejectsJacobiViolation) {
    try {
        parse_algebra(read_file(kData + "/not_jacobi.json"));
        FAIL() << "expected JacobiFailure";
    } catch (const JacobiFailure& e) {
        EXPECT_EQ(e.triple(), (std::array<std::size_t, 3>{0, 1, 2}));
    }
}

TEST(AlgebraFile, ParseErrors) {
    EXPECT_THROW(parse_algebra("{\"dim\": 2,\n \"brackets\": [}"), ParseError);
    try {
        parse_algebra("{\"dim\": 2,\n \"brackets\": [}");
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    EXPECT_THROW(parse_algebra(R"({"brackets": []})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"dim": 2, "brackets": [{"i": 1, "j": 0, "value": []}]})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"dim": 2, "brackets": [{"i": 0, "j": 2, "value": []}]})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "value": [[1, 1]]}]})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "value": [[1, "0.5"]]}]})"), ParseError);
    EXPECT_THROW(parse_algebra(
                     R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "value": []}, {"i": 0, "j": 1, "value": []}]})"),
                 ParseError);
    try {
        parse_algebra(R"({"dim": 3, "brackets": [{"i": 0, "j": 1, "value": [[5, "1"]]}]})");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("brackets[0].value[0]"), std::string::npos);
    }
}

TEST(AlgebraFile, RoundTrip) {
    for (const auto& g : {heisenberg(2), nonabelian2(), full_graph(heisenberg(1)).whole, abelian(3)}) {
        const std::string text = serialize_algebra(g);
        const auto back = parse_algebra(text);
        EXPECT_EQ(back, g);
        EXPECT_EQ(serialize_algebra(back), text);
    }
    EXPECT_NE(serialize_algebra(full_graph(heisenberg(1)).whole).find("\"-1\""), std::string::npos);
}

TEST(AlgebraFile, FractionsAccepted) {
    const auto g = parse_algebra(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "value": [[1, "2/2"]]}]})");
    EXPECT_EQ(bracket(g, {1, 0}, {0, 1}), (Element{0, 1}));
}

TEST(Homomorphism, ParseFile) {
    const auto phi = parse_homomorphism(read_file(kData + "/scaling_on_h3.json"));
    EXPECT_EQ(phi.source(), abelian(1));
    EXPECT_EQ(phi.target(), heisenberg(1));
    EXPECT_EQ(phi.images().front(), Matrix::diagonal({1, 1, 2}));
    const auto again = parse_homomorphism(to_json(phi).dump());
    EXPECT_EQ(again.images(), phi.images());
}

TEST(Homomorphism, RejectsNonDerivation) {
    const std::string text = R"({"source": "catalog:abelian:1", "target": "catalog:heisenberg:1",
        "images": [[["1","0","0"],["0","0","0"],["0","0","0"]]]})";
    EXPECT_THROW(parse_homomorphism(text), HomomorphismError);
}

TEST(Torus, ParseForms) {
    const auto t = parse_torus(read_file(kData + "/h3_grading_torus.json"), 6);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0], Matrix::diagonal({1, 1, 1, 2, 2, 2}));
    EXPECT_EQ(parse_torus(R"([[["1","0"],["0","2"]]])", 2).front(), Matrix::diagonal({1, 2}));
    EXPECT_THROW(parse_torus(R"([[["1","0"]]])", 2), ParseError);
}

TEST(Cli, Catalog) {
    const auto r = run({"catalog", "list"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("heisenberg:<N>"), std::string::npos);
}

TEST(Cli, AnalyzeFile) {
    const auto r = run({"analyze", kData + "/heisenberg1.json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["der_dim"], 6);
    EXPECT_EQ(j["inner_dim"], 2);
    EXPECT_EQ(j["completeness"]["complete"], false);
    EXPECT_EQ(j["series"]["is_nilpotent"], true);
    EXPECT_FALSE(j.contains("der_basis"));
    EXPECT_TRUE(Json::parse(run({"analyze", "catalog:heisenberg:1", "--full"}).out).contains("der_basis"));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"verify", "theorem3", "--N", "1", "--n", "1"}).code, 0);
    EXPECT_EQ(run({"verify", "lemma3", "--instance", "gap"}).code, 2);
    EXPECT_EQ(run({"verify", "lemma3", "--instance", "faithful"}).code, 0);
    EXPECT_EQ(run({"verify", "lemma3", "--phi", kData + "/scaling_on_h3.json"}).code, 0);
    EXPECT_EQ(run({"verify", "lemma3", "--phi", kData + "/zero_on_h3.json"}).code, 2);
    EXPECT_EQ(run({"analyze", "catalog:nosuch"}).code, 1);
    EXPECT_EQ(run({"analyze", kData + "/missing.json"}).code, 1);
    EXPECT_EQ(run({"analyze", kData + "/not_jacobi.json"}).code, 1);
    EXPECT_EQ(run({"verify", "nonsense"}).code, 1);
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"verify", "theorem1", "--g", "catalog:heisenberg:1", "--torus", "grading"}).code, 1);
    EXPECT_EQ(run({"verify", "theorem2", "--g", "catalog:heisenberg:1"}).code, 1);
}

TEST(Cli, TorusSources) {
    const auto grading = run({"verify", "theorem1", "--g", "catalog:heisenberg:1", "--graded-power", "2"});
    ASSERT_EQ(grading.code, 0) << grading.err;
    EXPECT_EQ(Json::parse(grading.out)["report"]["dimensions"]["dim Der(h1)"], 19);
    const auto file = run({"verify", "theorem1", "--g", "graded-power:catalog:heisenberg:1:2", "--torus",
                           kData + "/h3_grading_torus.json"});
    ASSERT_EQ(file.code, 0) << file.err;
    EXPECT_EQ(Json::parse(file.out)["report"], Json::parse(grading.out)["report"]);
    const auto diag =
        run({"verify", "theorem1", "--g", "catalog:graded-power:heisenberg:1:2", "--torus", "diagonal"});
    EXPECT_EQ(diag.code, 0) << diag.err;
}

TEST(Cli, ReportsAreDeterministic) {
    const std::vector<std::string> args{"verify", "theorem2", "--g", "full-graph:catalog:heisenberg:1"};
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(Json::parse(a.out)["report"]["status"], "pass");
}

TEST(Cli, ConstructRoundTrip) {
    const auto r = run({"construct", "heisenberg:2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(parse_algebra(r.out), heisenberg(2));
    const auto path = (std::filesystem::temp_directory_path() / "lie_construct_test.json").string();
    const auto w = run({"construct", "semidirect:" + kData + "/scaling_on_h3.json", "--out", path});
    ASSERT_EQ(w.code, 0) << w.err;
    EXPECT_EQ(parse_algebra(read_file(path)).dim(), 4u);
    std::filesystem::remove(path);
}

TEST(Cli, Tower) {
    const auto r = run({"tower", "full-graph:catalog:heisenberg:1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out)["stabilized_at"], 1);
    EXPECT_EQ(run({"tower", "full-graph:catalog:heisenberg:1", "--max-steps", "0"}).code, 2);
}

TEST(Cli, DimensionCapFromEnvironment) {
    {
        ScopedEnv env("LIE_DIM_CAP", "8");
        EXPECT_EQ(cli::dim_cap_from_env(), 8u);
        const auto r = run({"analyze", "catalog:full-graph:heisenberg:1"});
        EXPECT_EQ(r.code, 1);
        EXPECT_NE(r.err.find("cap"), std::string::npos);
    }
    {
        ScopedEnv env("LIE_DIM_CAP", "zero");
        EXPECT_EQ(run({"catalog"}).code, 1);
    }
    EXPECT_EQ(cli::dim_cap_from_env(), kDefaultDimCap);
}
