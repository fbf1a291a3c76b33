#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

#include <nchopf/cli.hpp>

using namespace nchopf;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name)
{
    return std::string(NCHOPF_SAMPLES_DIR) + "/series/" + name;
}

} // namespace

TEST(Cli, AntipodeClosed)
{
    const Result r = run({"antipode", "dif", "--method", "closed", "--gen", "3", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "-a3 + 2 a1 a2 + 3 a2 a1 - 5 a1^3\n");
    EXPECT_EQ(run({"antipode", "dif", "--gen", "3"}).out, r.out);
}

TEST(Cli, AntipodeInv)
{
    EXPECT_EQ(run({"antipode", "inv", "--gen", "2"}).out, "-b2 + b1^2\n");
    EXPECT_EQ(run({"antipode", "inv", "--method", "closed", "--gen", "3"}).out,
              run({"antipode", "inv", "--gen", "3"}).out);
}

TEST(Cli, AntipodeJsonRoundTrips)
{
    const Result r = run({"antipode", "dif", "--gen", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(poly_from_json(json::parse(r.out)), antipode_recursive(4));
}

TEST(Cli, Lambda)
{
    EXPECT_EQ(run({"lambda", "--tuple", "1"}).out, "2\n");
    EXPECT_EQ(run({"lambda", "--tuple", "1,1"}).out, "5\n");
    const Result bad = run({"lambda", "--tuple", "1,x"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("tuple"), std::string::npos);
}

TEST(Cli, Coproducts)
{
    EXPECT_EQ(run({"coproduct", "dif", "--gen", "2"}).out, "1 ⊗ a2 + 2 a1 ⊗ a1 + a2 ⊗ 1\n");
    EXPECT_EQ(run({"coproduct", "inv", "--gen", "2"}).out, "1 ⊗ b2 + b1 ⊗ b1 + b2 ⊗ 1\n");
    EXPECT_EQ(run({"coproduct", "bdif", "--gen", "1"}).out, "a0 ⊗ a1 + a1 ⊗ a0^2\n");
    EXPECT_EQ(run({"coproduct", "ttb", "--gen", "2"}).out, "[1] ⊗ [2] + [2] ⊗ [1,1]\n");
    EXPECT_EQ(run({"coproduct", "ttb", "--blocks", "[1,1]"}).out, "[1,1] ⊗ [1,1]\n");
    EXPECT_EQ(run({"coproduct", "alpha", "--gen", "1"}).out, "L ⊗ (L L) + (L L) ⊗ L\n");
    EXPECT_EQ(run({"coproduct", "e", "--gen", "1"}).out, "1 ⊗ (L L) + (L L) ⊗ 1\n");
    EXPECT_EQ(run({"coproduct", "gamma", "--gen", "2"}).out, run({"coproduct", "e", "--gen", "2"}).out);
}

TEST(Cli, CoproductJsonRoundTrips)
{
    const Result r = run({"coproduct", "dif", "--gen", "5", "--format", "json"});
    const json j = json::parse(r.out);
    EXPECT_EQ(j["alphabets"], json::parse(R"(["a","a"])"));
    EXPECT_EQ(tensor_from_json(j), coproduct_dif(gen(5)));
}

TEST(Cli, QPoly)
{
    EXPECT_EQ(run({"qpoly", "--m", "2", "--n", "1"}).out, "2 a2 + a1^2\n");
    EXPECT_EQ(run({"qpoly", "Q[2,1]"}).out, "2 a2 + a1^2\n");
    EXPECT_EQ(run({"qpoly", "--m", "0", "--n", "-1"}).out, "1\n");
    EXPECT_EQ(run({"qpoly", "--m", "1", "--n", "1", "--literal-a0"}).out, "a0 a1 + a1 a0\n");
    EXPECT_EQ(run({"qpoly", "Q[2,x]"}).code, 2);
    EXPECT_EQ(run({"qpoly", "--m", "2", "--n", "-2"}).code, 2);
}

TEST(Cli, Bijection)
{
    EXPECT_EQ(run({"bijection", "to-tree", "2,1,0"}).out, "((L (L L)) L)\n");
    EXPECT_EQ(run({"bijection", "to-tuple", "((L (L L)) L)"}).out, "2,1,0\n");
    const Result t = run({"bijection", "to-tree", "4,0,1,0,0,2,1,0"});
    EXPECT_EQ(run({"bijection", "to-tuple", t.out.substr(0, t.out.size() - 1)}).out, "4,0,1,0,0,2,1,0\n");
    const Result bad = run({"bijection", "to-tree", "0,2"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("tuple"), std::string::npos);
    EXPECT_EQ(run({"bijection", "to-tuple", "(L L"}).code, 2);
}

TEST(Cli, Trees)
{
    const Result r = run({"trees", "--enumerate", "2"});
    EXPECT_EQ(r.out, "(L (L L))\n((L L) L)\n");
    const json j = json::parse(run({"trees", "--enumerate", "4", "--format", "json"}).out);
    EXPECT_EQ(j["count"], 14);
}

TEST(Cli, SeriesOperations)
{
    const Result inv = run({"series", "inverse-diffeo", "--input", sample("x_plus_x2.json")});
    EXPECT_EQ(inv.code, 0) << inv.err;
    EXPECT_EQ(inv.out, "x^1: 1\nx^2: -1\nx^3: 2\nx^4: -5\nx^5: 14\nx^6: -42\n");

    const Result comp = run({"series", "compose", "--input", sample("x_plus_x2.json"), "--input",
                             sample("x_plus_x2.json"), "--order", "3"});
    EXPECT_EQ(comp.out, "x^1: 1\nx^2: 2\nx^3: 2\nx^4: 1\n");

    const Result mul = run({"series", "mul", "--input", sample("one_plus_x.json"), "--input",
                            sample("one_minus_x.json"), "--format", "json"});
    const json j = json::parse(mul.out);
    EXPECT_EQ(j["coeffs"], json::parse(R"(["1","0","-1","0"])"));

    const Result assoc = run({"series", "associator", "--input", sample("matrix_phi.json"), "--input",
                              sample("matrix_psi.json"), "--input", sample("matrix_eta.json")});
    EXPECT_EQ(assoc.code, 0) << assoc.err;
    EXPECT_NE(assoc.out.find("x^4: [-1 0; 0 0]"), std::string::npos) << assoc.out;

    const Result formal = run({"series", "inv", "--input", sample("formal_f.json")});
    EXPECT_NE(formal.out.find("x^3: -c3 + c1 c2 + c2 c1 - c1^3"), std::string::npos) << formal.out;
}

TEST(Cli, SeriesErrors)
{
    const Result missing = run({"series", "inv", "--input", "/nonexistent.json"});
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("input"), std::string::npos);
    const Result arity = run({"series", "mul", "--input", sample("one_plus_x.json")});
    EXPECT_EQ(arity.code, 2);
    const Result order = run({"series", "inv", "--input", sample("one_plus_x.json"), "--order", "9"});
    EXPECT_EQ(order.code, 2);
    EXPECT_NE(order.err.find("order"), std::string::npos);
    const Result noncomm = run({"series", "inverse-diffeo", "--input", sample("matrix_phi.json")});
    EXPECT_EQ(noncomm.code, 2);
}

TEST(Cli, Verify)
{
    const Result r = run({"verify", "--suite", "antipode-equivalence", "--max-degree", "9"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("0 failed"), std::string::npos);
    const json j = json::parse(run({"verify", "--suite", "catalan-bijection", "--max-degree", "6", "--format", "json"}).out);
    EXPECT_EQ(j["passed"], true);
}

TEST(Cli, UnknownSuiteListsAvailable)
{
    const Result r = run({"verify", "--suite", "nope", "--max-degree", "3"});
    EXPECT_EQ(r.code, 2);
    for (const auto& name : available_suites())
        EXPECT_NE(r.err.find(name), std::string::npos) << name;
}

TEST(Cli, MalformedInputExitsTwo)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"coproduct", "nope", "--gen", "1"}).code, 2);
    EXPECT_EQ(run({"coproduct", "dif", "--gen", "x"}).code, 2);
    const Result r = run({"coproduct", "dif", "--gen", "0"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("gen"), std::string::npos);
    EXPECT_EQ(run({"antipode", "dif", "--gen", "2", "--format", "xml"}).code, 2);
}

TEST(Cli, Deterministic)
{
    const std::vector<std::string> args{"coproduct", "alpha", "--gen", "4", "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, EnvironmentSelectsDefaultFormat)
{
    ::setenv("NCHOPF_FORMAT", "json", 1);
    const Result r = run({"lambda", "--tuple", "2"});
    ::unsetenv("NCHOPF_FORMAT");
    EXPECT_EQ(json::parse(r.out)["lambda"], "3");
}

TEST(Cli, BinaryExitCodes)
{
    const std::string bin = NCHOPF_CLI_PATH;
    auto status = [&](const std::string& args) {
        const int s = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    EXPECT_EQ(status("lambda --tuple 1"), 0);
    EXPECT_EQ(status("lambda --tuple 0"), 2);
    EXPECT_EQ(status("verify --suite resolvent --max-degree 3"), 0);
}
