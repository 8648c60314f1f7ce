#include "catch_amalgamated.hpp"

#include "singclass_app.hpp"

#include <cstdlib>
#include <sstream>

using singclass::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expansion verbs", "[cli]") {
    CHECK(invoke({"product", "2"}).out == "a_2 + 1/2*i[1,1]\n");
    CHECK(invoke({"psi", "2"}).out == "1/2*a_2 + 1/4*i[1,1] + 3/2*xi*a_1 + xi^2\n");
    CHECK(invoke({"to-basic", "a_1"}).out == "psi - xi\n");
    CHECK(invoke({"to-sing", "d[0,1]"}).out == "i[1,2] + xi*i[1,1]\n");
    CHECK(invoke({"to-sing", "xi"}).out == "xi\n");
    CHECK(invoke({"--format", "latex", "to-basic", "a_1"}).out == "\\psi - \\xi\n");
    const auto json = nlohmann::json::parse(invoke({"--format", "json", "product", "1"}).out);
    CHECK(json["terms"][0]["tree"] == "1");
}

TEST_CASE("cycle verbs", "[cli]") {
    CHECK(invoke({"completed-cycle", "3"}).out == "1/6*C[4] + 1/3*C[1,2] + 5/24*C[2]\n");
    CHECK(invoke({"completed-cycle", "3", "--genus0"}).out == "1/6*C[4] + 1/3*C[1,2]\n");
    CHECK(invoke({"x-poly", "2"}).out == "1/2*x_3 + 1/4*x_1^2\n");
    CHECK(invoke({"x-poly", "2", "--raw"}).out == "x_3 + 1/2*x_1^2\n");
    CHECK(invoke({"--format", "latex", "x-poly", "2"}).out == "\\frac{1}{2} x_{3} + \\frac{1}{4} x_{1}^{2}\n");
    const Outcome product = invoke({"multiply-cycles", "{2}", "{2}", "--verify-at", "4"});
    CHECK(product.code == 0);
    CHECK(product.out == "C[2,2] + 3*C[3] + 1/2*C[1,1]\n");
    CHECK(product.err.find("verified") != std::string::npos);
    CHECK(invoke({"--format", "latex", "completed-cycle", "2"}).out ==
          "\\frac{1}{2} C_{3} + \\frac{1}{4} C_{1,1} + \\frac{1}{24} C_{1}\n");
    CHECK(invoke({"char", "[2,1]", "[3]"}).out == "-1\n");
}

TEST_CASE("coefficient and local model verbs", "[cli]") {
    CHECK(invoke({"coeff", "psi", "3", "1,2"}).out == "1/3\n");
    CHECK(invoke({"coeff", "psi", "3", "1,2", "--raw"}).out == "2\n");
    CHECK(invoke({"coeff", "delta", "0,2", "1,1,1"}).out == "1/4\n");
    const Outcome local = invoke({"local-model", "{2,2}", "0", "1,-1"});
    CHECK(local.code == 0);
    CHECK(local.out.find("K = 2, r = (1,1), d = 2") != std::string::npos);
    CHECK(local.out.find("pole 1 order 2: u = 1/2, a_1 = 3/2") != std::string::npos);
    const auto json = nlohmann::json::parse(invoke({"--format", "json", "local-model", "{3}", "1", "0"}).out);
    CHECK(json["K"] == 3);
    CHECK(json["branches"][0]["u"] == "-1");
}

TEST_CASE("verify suites", "[cli]") {
    for (const std::string suite : {"ko", "equality", "cycles", "roundtrip"}) {
        const Outcome o = invoke({"verify", suite, "--max-m", "3"});
        CHECK(o.code == 0);
        CHECK(o.out.find("FAIL") == std::string::npos);
    }
    const auto json = nlohmann::json::parse(invoke({"--format", "json", "verify", "equality", "--max-m", "2"}).out);
    CHECK(json["suite"] == "equality");
    CHECK(json["failed"] == 0);
    CHECK(json["checks"].size() == 2);
}

TEST_CASE("appendix suite reports the a_4 row", "[cli]") {
    const Outcome o = invoke({"verify", "appendix"});
    CHECK(o.code == 1);
    CHECK(o.out.find("FAIL sing_to_basic.txt:14 to-basic a_4") != std::string::npos);
    CHECK(o.out.find("PASS psi_powers.txt:6 psi 5") != std::string::npos);
    CHECK(invoke({"--fixtures", "/nonexistent", "verify", "appendix"}).code == 3);
}

TEST_CASE("exit codes", "[cli]") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({"product"}).code == 2);
    CHECK(invoke({"--format", "yaml", "product", "1"}).code == 2);
    CHECK(invoke({"to-sing", "a_1 +"}).code == 2);
    CHECK(invoke({"to-sing", "a_1 + a_2"}).code == 2);
    CHECK(invoke({"to-sing", "a_1"}).code == 3);
    CHECK(invoke({"char", "[2]", "[1]"}).code == 3);
    CHECK(invoke({"coeff", "psi", "2", "2,2"}).code == 3);
    CHECK(invoke({"multiply-cycles", "{2}", "{2}", "--verify-at", "3"}).code == 3);
    CHECK(invoke({"local-model", "{1,1}", "0", "1"}).code == 3);
    CHECK(invoke({"completed-cycle", "-1"}).code == 3);
}

TEST_CASE("codimension cap", "[cli]") {
    ::setenv("SINGCLASS_MAX_CODIM", "3", 1);
    CHECK(invoke({"psi", "3"}).code == 0);
    CHECK(invoke({"psi", "4"}).code == 3);
    CHECK(invoke({"to-basic", "a_4"}).code == 3);
    ::setenv("SINGCLASS_MAX_CODIM", "x", 1);
    CHECK(invoke({"psi", "1"}).code == 2);
    ::unsetenv("SINGCLASS_MAX_CODIM");
    CHECK(invoke({"psi", "4"}).code == 0);
}
