// CLI end-to-end behavior through run(): output shapes, exit codes, the
// error-name contract on standard error, and JSON determinism.

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <qosc/cli.hpp>

using namespace qosc;

namespace {

const std::string PEX = "(q-q^-1)^3*C-(q-q^-1)*(q^-2+q^2)";

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("alpha subcommand reports the weight classification and the value", "[cli]") {
    Run r = invoke({"alpha", "--p", PEX, "--r", "q", "--m", "2"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "r = q  [= +q^1]\nalpha_{r,2} = 0\n");
    REQUIRE(r.err.empty());
}

TEST_CASE("normal-form defaults to the undeformed algebra", "[cli]") {
    Run r = invoke({"normal-form", "--expr", "XY"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "q*Y X\n"); // X Y = q Y X when p = 0
}

TEST_CASE("simple prints the worked-example dimension", "[cli]") {
    Run r = invoke({"simple", "--p", PEX, "--r", "q"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "r = q  [= +q^1]\ndim 2\nfirst alpha root: 1\nrelations: all pass\n");

    Run inf = invoke({"simple", "--p", PEX, "--r", "2"});
    REQUIRE(inf.code == 0);
    REQUIRE(inf.out ==
            "r = 2  [not a signed power of q]\nV(r) is infinite dimensional\n");
}

TEST_CASE("multiply agrees with the library operation", "[cli]") {
    Run r = invoke({"multiply", "--lhs", "E", "--rhs", "F", "--p", "C"});
    REQUIRE(r.code == 0);
    CenterPolynomial pt = CenterPolynomial::identity();
    PbwElement want = multiply(PbwElement::generator(Letter::E),
                               PbwElement::generator(Letter::F), pt);
    REQUIRE(r.out == want.to_string() + "\n");
}

TEST_CASE("json output is deterministic and structured", "[cli]") {
    std::vector<std::string> args = {"center", "--p",     PEX,
                                     "--bounds", "1,1,1,1,1", "--format", "json"};
    Run a = invoke(args), b = invoke(args);
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    REQUIRE(j["dimension"] == 1);
    REQUIRE(j["span"] == 12);
    REQUIRE(j["bounds"] == nlohmann::json::array({1, 1, 1, 1, 1}));
    REQUIRE(j["basis"] == nlohmann::json::array({"1"}));

    SECTION("--format may precede the subcommand too") {
        Run c = invoke({"--format", "json", "center", "--p", PEX, "--bounds", "1,1,1,1,1"});
        REQUIRE(c.code == 0);
        REQUIRE(c.out == a.out);
    }
}

TEST_CASE("exit code 2 on malformed input, with ParseError on stderr", "[cli]") {
    Run bad_expr = invoke({"alpha", "--p", PEX, "--r", "q+", "--m", "2"});
    REQUIRE(bad_expr.code == 2);
    REQUIRE(bad_expr.err.find("ParseError") != std::string::npos);

    Run bad_word = invoke({"normal-form", "--expr", "XZ"});
    REQUIRE(bad_word.code == 2);
    REQUIRE(bad_word.err.find("unknown generator") != std::string::npos);

    Run bad_bounds = invoke({"center", "--p", PEX, "--bounds", "1,2"});
    REQUIRE(bad_bounds.code == 2);

    Run unknown = invoke({"no-such-command"});
    REQUIRE(unknown.code == 2);

    Run missing = invoke({"alpha", "--p", PEX});
    REQUIRE(missing.code == 2);
}

TEST_CASE("exit code 1 on domain refusals, with the error name verbatim", "[cli]") {
    Run zero_p = invoke({"simple", "--p", "0", "--r", "q"});
    REQUIRE(zero_p.code == 1);
    REQUIRE(zero_p.err.rfind("ZeroDeformation:", 0) == 0);

    Run zero_w = invoke({"alpha", "--p", PEX, "--r", "q-q", "--m", "2"});
    REQUIRE(zero_w.code == 1);
    REQUIRE(zero_w.err.rfind("ZeroArgument:", 0) == 0);

    Run too_big = invoke({"center", "--p", PEX, "--bounds", "4,4,4,4,4"});
    REQUIRE(too_big.code == 1);
    REQUIRE(too_big.err.rfind("SpanTooLarge:", 0) == 0);
}

TEST_CASE("help is exit code 0", "[cli]") {
    Run r = invoke({"--help"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("normal-form") != std::string::npos);
}

TEST_CASE("weight-bearing outputs carry the signed-power classification", "[cli]") {
    Run r = invoke({"block", "--p", PEX, "--r", "q^-4"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("[= +q^-4]") != std::string::npos);
    REQUIRE(r.out.find("r0 = q  [= +q^1]") != std::string::npos);

    Run s = invoke({"maximal-vectors", "--p", PEX, "--r", "-q", "--n", "5"});
    REQUIRE(s.code == 0);
    REQUIRE(s.out.find("[= -q^1]") != std::string::npos);
}

TEST_CASE("counterexample subcommand states the verdict", "[cli]") {
    Run r = invoke({"counterexample-c0zero"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("verdict: not semisimple") != std::string::npos);
    REQUIRE(r.out.find("v0 line has complement: no") != std::string::npos);
}
