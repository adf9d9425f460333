#include "ringdim/commands.hpp"
#include "ringdim/errors.hpp"

#include <doctest.h>

#include <sstream>
#include <string>

using namespace ringdim;

namespace {

ProblemSpec spec_of(const std::string& text) { return parse_problem(text); }

const std::string golden2 = "ring: ZZ\n"
                            "vars: x, y, z\n"
                            "order: lex\n"
                            "ideal: [x^2*y + x + 1, y^3 + z + 1]\n";

const std::string edges = "ring: ZZ\n"
                          "vars: x, y, z\n"
                          "order: lex\n"
                          "ideal: [x*y, x*z]\n";

const std::string doubled = "ring: ZZ\n"
                            "vars: x\n"
                            "order: lex\n"
                            "ideal: [2*x]\n";

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::string& command, const std::string& problem, RunOptions options = {}) {
    std::ostringstream out, err;
    int code = execute(command, spec_of(problem), options, out, err);
    return Outcome{code, out.str(), err.str()};
}

} // namespace

TEST_CASE("gb report") {
    nlohmann::ordered_json j = run_command("gb", spec_of(golden2), RunOptions{});
    CHECK(j["command"] == "gb");
    CHECK(j["ring"] == "ZZ");
    CHECK(j["vars"] == nlohmann::ordered_json::array({"x", "y", "z"}));
    CHECK(j["order"] == "lex");
    CHECK(j["ideal"] == nlohmann::ordered_json::array({"x^2*y + x + 1", "y^3 + z + 1"}));
    CHECK(j["basis"] == nlohmann::ordered_json::array(
                            {"y^3 + z + 1", "x^2*z + x^2 - x*y^2 - y^2", "x^2*y + x + 1"}));
    CHECK(j["reduced"] == true);
    CHECK(j["monic"] == true);
    CHECK(j["warnings"] == nlohmann::ordered_json::array());

    // key order and bytes are stable across runs
    std::string once = run_command("gb", spec_of(golden2), RunOptions{}).dump(2);
    std::string twice = run_command("gb", spec_of(golden2), RunOptions{}).dump(2);
    CHECK(once == twice);

    ProblemSpec small = spec_of("ring: ZZ\nvars: x\norder: lex\nideal: [3*x, 5*x]\n");
    CHECK(run_command("gb", small, RunOptions{}).dump() ==
          R"({"command":"gb","ring":"ZZ","vars":["x"],"order":"lex","ideal":["3*x","5*x"],)"
          R"("basis":["x"],"reduced":true,"monic":true,"warnings":[]})");
}

TEST_CASE("check-free report") {
    nlohmann::ordered_json j = run_command("check-free", spec_of(doubled), RunOptions{});
    CHECK(j["is_free"] == false);
    CHECK(j["monic"] == false);
    REQUIRE(!j["witness"].is_null());
    CHECK(j["witness"]["monomial"] == "x");
    CHECK(j["witness"]["generators"] == nlohmann::ordered_json::array({"2"}));
    CHECK(j["witness"]["gcd"] == "2");

    nlohmann::ordered_json ok = run_command("check-free", spec_of(golden2), RunOptions{});
    CHECK(ok["is_free"] == true);
    CHECK(ok["witness"].is_null());

    // reporting never refuses: the verdict is the payload
    Outcome res = run("check-free", doubled);
    CHECK(res.code == 0);
    CHECK(res.err.empty());
    CHECK(res.out.find("free: no") != std::string::npos);
    CHECK(res.out.find("witness monomial: x") != std::string::npos);
    CHECK(res.out.find("witness leading coefficients: 2") != std::string::npos);
    CHECK(res.out.find("witness gcd: 2") != std::string::npos);
}

TEST_CASE("cdim report") {
    nlohmann::ordered_json j = run_command("cdim", spec_of(edges), RunOptions{});
    CHECK(j["cdim"] == 2);
    CHECK(j["maximal_sets"] ==
          nlohmann::ordered_json::array({nlohmann::ordered_json::array({"y", "z"}),
                                         nlohmann::ordered_json::array({"x"})}));
    CHECK(j["lbs"] == nlohmann::ordered_json::array({"y", "z"}));

    RunOptions desc;
    desc.scan = ScanOrder::DescendingPrecedence;
    nlohmann::ordered_json d = run_command("cdim", spec_of(edges), desc);
    CHECK(d["lbs"] == nlohmann::ordered_json::array({"x"}));
}

TEST_CASE("kdim report routes by order") {
    nlohmann::ordered_json lex = run_command(
        "kdim", spec_of("ring: ZZ\nvars: x, y, z\norder: lex\nideal: [x^2 + z*x, y + 6*z]\n"),
        RunOptions{});
    CHECK(lex["kdim"] == 2);
    CHECK(lex["cdim"] == 1);
    CHECK(lex["lbs"] == nlohmann::ordered_json::array({"z"}));
    CHECK(!lex.contains("numerator"));

    nlohmann::ordered_json deg = run_command(
        "kdim", spec_of("ring: ZZ\nvars: x, y, z\norder: deglex\nideal: [x^2 + z*x, y + 6*z]\n"),
        RunOptions{});
    CHECK(deg["kdim"] == 2);
    CHECK(deg["numerator"] == nlohmann::ordered_json::array({1, -1, -1, 1}));
    CHECK(deg["polynomial"] == "2*x + 1");
    CHECK(deg["degree"] == 1);
    CHECK(!deg.contains("cdim"));
}

TEST_CASE("hilbert report") {
    RunOptions opt;
    opt.terms = 4;
    nlohmann::ordered_json j = run_command(
        "hilbert", spec_of("ring: QQ\nvars: x, y, z\norder: deglex\nideal: [x*y, x*z]\n"), opt);
    CHECK(j["numerator"] == nlohmann::ordered_json::array({1, 0, -2, 1}));
    CHECK(j["n"] == 3);
    CHECK(j["coefficients"] == nlohmann::ordered_json::array({1, 4, 8, 13}));
    CHECK(j["polynomial"] == "1/2*x^2 + 5/2*x + 1");
    CHECK(j["degree"] == 2);
    CHECK(j["display_numerator"] == "1 + t - t^2");
    CHECK(j["display_denominator_power"] == 3);

    RunOptions wide;
    wide.terms = 8;
    nlohmann::ordered_json w = run_command(
        "hilbert", spec_of("ring: QQ\nvars: x, y, z\norder: deglex\nideal: [x*y, x*z]\n"), wide);
    CHECK(w["coefficients"] == nlohmann::ordered_json::array({1, 4, 8, 13, 19, 26, 34, 43}));

    CHECK_THROWS_AS(
        run_command("hilbert",
                    spec_of("ring: ZZ\nvars: x, y\norder: lex\nideal: [x*y]\n"), RunOptions{}),
        input_error); // lex is not degree compatible
}

TEST_CASE("reduce report") {
    RunOptions opt;
    opt.poly = "5*x";
    nlohmann::ordered_json j =
        run_command("reduce", spec_of("ring: ZZ\nvars: x\norder: lex\nideal: [3*x]\n"), opt);
    CHECK(j["poly"] == "5*x");
    CHECK(j["normal_form"] == "2*x");

    CHECK_THROWS_AS(
        run_command("reduce", spec_of("ring: ZZ\nvars: x\norder: lex\nideal: [3*x]\n"),
                    RunOptions{}),
        input_error); // --poly missing

    opt.poly = "x^2*y + x + 1";
    nlohmann::ordered_json zero = run_command("reduce", spec_of(golden2), opt);
    CHECK(zero["normal_form"] == "0");
}

TEST_CASE("option validation") {
    RunOptions bad_terms;
    bad_terms.terms = 0;
    CHECK_THROWS_AS(run_command("hilbert", spec_of(edges), bad_terms), input_error);
    CHECK_THROWS_AS(run_command("eigenvalues", spec_of(edges), RunOptions{}), input_error);
}

TEST_CASE("exit codes") {
    CHECK(run("gb", golden2).code == 0);
    CHECK(run("check-free", doubled).code == 0);

    // refusal: no free representation
    for (const char* cmd : {"cdim", "kdim", "hilbert"}) {
        std::string problem = std::string(cmd) == std::string("hilbert")
                                  ? "ring: ZZ\nvars: x\norder: deglex\nideal: [2*x]\n"
                                  : doubled;
        Outcome res = run(cmd, problem);
        CHECK(res.code == 2);
        CHECK(res.err.find("error: not a free representation") == 0);
        CHECK(res.out.empty());
    }

    // malformed input: unit ideal
    Outcome unit = run("kdim", "ring: QQ\nvars: x, y\norder: lex\nideal: [x, x + 1]\n");
    CHECK(unit.code == 1);
    CHECK(unit.err == "error: unit ideal: the residue ring is zero\n");

    RunOptions bad_format;
    bad_format.format = "yaml";
    Outcome fmt = run("gb", golden2, bad_format);
    CHECK(fmt.code == 1);
    CHECK(fmt.err == "error: unknown format 'yaml' (expected text or json)\n");
    CHECK(fmt.out.empty());
}

TEST_CASE("text rendering") {
    Outcome res = run("kdim", "ring: ZZ\nvars: x, y, z\norder: lex\nideal: [x^2 + z*x, y + 6*z]\n");
    CHECK(res.code == 0);
    CHECK(res.out == "command: kdim\n"
                     "ring: ZZ\n"
                     "vars: x y z\n"
                     "order: lex\n"
                     "ideal:\n"
                     "  x^2 + x*z\n"
                     "  y + 6*z\n"
                     "basis:\n"
                     "  y + 6*z\n"
                     "  x^2 + x*z\n"
                     "cdim: 1\n"
                     "maximal independent sets:\n"
                     "  {z}\n"
                     "left basic set: {z}\n"
                     "kdim: 2\n");

    RunOptions opt;
    opt.terms = 4;
    std::ostringstream out, err;
    int code = execute("hilbert",
                       spec_of("ring: QQ\nvars: x, y, z\norder: deglex\nideal: [x*y, x*z]\n"), opt,
                       out, err);
    CHECK(code == 0);
    CHECK(out.str().find("series: (1 + t - t^2) / (1 - t)^3\n") != std::string::npos);
    CHECK(out.str().find("numerator: [1, 0, -2, 1]\n") != std::string::npos);
    CHECK(out.str().find("coefficients: 1 4 8 13\n") != std::string::npos);
    CHECK(out.str().find("polynomial: 1/2*x^2 + 5/2*x + 1\n") != std::string::npos);
    CHECK(out.str().find("degree: 2\n") != std::string::npos);
}

TEST_CASE("json output shape through execute") {
    RunOptions opt;
    opt.format = "json";
    std::ostringstream out, err;
    int code = execute("gb", spec_of("ring: ZZ\nvars: x\norder: lex\nideal: [3*x, 5*x]\n"), opt,
                       out, err);
    CHECK(code == 0);
    nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(out.str());
    CHECK(parsed["basis"] == nlohmann::ordered_json::array({"x"}));
    CHECK(out.str().back() == '\n');
}
