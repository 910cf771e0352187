#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "niep/classify.hpp"
#include "niep/json_io.hpp"
#include "niep/threshold.hpp"

using namespace niep;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(NIEP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("json: scalar, polynomial and spectrum round-trips") {
    const Rational r(-19, 10);
    CHECK(rational_from_json(to_json(r)) == r);

    const QuadExt q(R(1, 2), R(-3, 7), 6);
    const QuadExt q2 = quadext_from_json(to_json(q));
    CHECK(q2 == q);

    const Poly p{R(-15), R(0), R(78), R(0), R(1)};
    CHECK(poly_from_json(to_json(p)) == p);

    const Spectrum sp(std::vector<Rational>{R(4), R(2), R(-2), R(-2), R(-2)});
    CHECK(spectrum_from_json(to_json(sp)) == sp);
    CHECK(to_json(sp).dump() == R"({"values":["4","2","-2","-2","-2"]})");

    CHECK_THROWS_AS(spectrum_from_json(json::parse(R"({"nope": 1})")), DomainError);
    CHECK_THROWS_AS(rational_from_json(json::parse("1.5")), DomainError);
}

TEST_CASE("json: matrix round-trip is byte-identical for both fields") {
    const auto& mq = std::get<MatrixQ>(find_catalog_entry("jordan_sigma_3_4")->matrix);
    const json j1 = to_json(mq);
    const MatrixAny back = matrix_from_json(j1);
    CHECK(to_json(back).dump() == j1.dump());
    CHECK(std::get<MatrixQ>(back) == mq);

    const auto& mx = std::get<MatrixQuad>(find_catalog_entry("sym_sigma_t1")->matrix);
    const json j2 = to_json(mx);
    const MatrixAny back2 = matrix_from_json(j2);
    CHECK(to_json(back2).dump() == j2.dump());
    CHECK(std::get<MatrixQuad>(back2) == mx);

    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n": 2, "entries": [["1","2"]]})")),
                    DomainError);
}

TEST_CASE("json: classification carries replayable witnesses") {
    const Spectrum sigma33(std::vector<Rational>{R(3), R(3), R(-2), R(-2), R(-2)});
    const json j = to_json(classify(sigma33));
    bool found = false;
    for (const auto& cond : j.at("conditions")) {
        if (cond.at("condition") == "lm_trace_zero") {
            found = true;
            CHECK(cond.at("witness").at("four_s4") == "840");
            CHECK(cond.at("witness").at("s2_squared") == "900");
        }
    }
    CHECK(found);
    CHECK(j.at("verdicts").at("NIEP").at("status") == "NOT_REALIZABLE");
    CHECK(j.at("partition_scan").at("ran") == true);
    CHECK(j.at("partition_scan").at("viable").empty());
}

TEST_CASE("cli: exit-code contract on the golden examples") {
    CHECK(run_cli(R"(check '{"values": ["3","3","-2","-2","-2"]}')").exit_code == 1);
    CHECK(run_cli(R"(check '{"values": ["4","2","-2","-2","-2"]}')").exit_code == 0);
    CHECK(run_cli(R"(check '{"values": ["3","-1","-1","-1"]}')").exit_code == 0);
    CHECK(run_cli("check 'not json'").exit_code == 2);
    CHECK(run_cli("check /nonexistent/path.json").exit_code == 2);

    CHECK(run_cli("construct lm_sigma_hat --t 1").exit_code == 0);
    CHECK(run_cli("construct lm_sigma_hat --t 2/5").exit_code == 1);
    CHECK(run_cli("construct lm_sigma_hat").exit_code == 2);
    CHECK(run_cli("construct jordan_sigma_3_4").exit_code == 0);
    CHECK(run_cli("construct jordan_sigma_3_4 --t 1").exit_code == 2);
    CHECK(run_cli("construct no_such_thing").exit_code == 2);

    CHECK(run_cli("threshold lm_sigma_hat").exit_code == 0);
    CHECK(run_cli("threshold perturbed").exit_code == 0);
    CHECK(run_cli("threshold no_such_family").exit_code == 2);

    CHECK(run_cli("fit-meehan --t 0.52").exit_code == 0);
    CHECK(run_cli("fit-meehan --t 0.50").exit_code == 1);
    CHECK(run_cli("fit-meehan --t -1").exit_code == 2);

    CHECK(run_cli(R"(roots '["-4","0","1"]')").exit_code == 0);
    CHECK(run_cli(R"(roots '["1","0","1"]')").exit_code == 0);
    CHECK(run_cli(R"(roots '["0"]')").exit_code == 2);
    CHECK(run_cli("roots '[]'").exit_code == 2);
}

TEST_CASE("cli: verify verb, dimension mismatch and Jordan reports") {
    const json id2 = to_json(MatrixQ::identity(2));
    const std::string id2_arg = "'" + id2.dump() + "'";
    CHECK(run_cli("verify --matrix " + id2_arg + R"( --spectrum '{"values": ["1","1"]}')")
              .exit_code == 0);
    CHECK(run_cli("verify --matrix " + id2_arg + R"( --spectrum '{"values": ["1","2"]}')")
              .exit_code == 1);  // charpoly mismatch
    CHECK(run_cli("verify --matrix " + id2_arg + R"( --spectrum '{"values": ["1","1","1"]}')")
              .exit_code == 2);  // dimension mismatch

    const auto res = run_cli(
        R"(--json verify --matrix '{"n": 2, "field": "rational", "entries": [["0","1"],["0","0"]]}' --spectrum '{"values": ["0","0"]}')");
    CHECK(res.exit_code == 0);
    const json rep = json::parse(res.out);
    CHECK(rep.at("results").at("jordan").size() == 1);
    CHECK(rep.at("results").at("jordan")[0].at("block_sizes") == json::array({2}));
    CHECK(rep.at("results").at("verification").at("diagonalizable") == false);
}

TEST_CASE("cli: construct --json output re-verifies byte-identically") {
    const auto first = run_cli("--json construct lm_sigma_hat --t 1");
    REQUIRE(first.exit_code == 0);
    const json out = json::parse(first.out);
    const json matrix = out.at("results").at("matrix");

    // (5,1) entry is 64 at t = 1
    CHECK(matrix.at("entries")[4][0] == "64");

    // re-parse, re-serialize: canonical form is stable
    const MatrixAny m = matrix_from_json(matrix);
    CHECK(to_json(m).dump() == matrix.dump());

    // feed the emitted matrix back through verify
    const std::string arg = "'" + matrix.dump() + "'";
    const auto second =
        run_cli("verify --matrix " + arg + R"( --spectrum '{"values": ["4","2","-2","-2","-2"]}')");
    CHECK(second.exit_code == 0);
}

TEST_CASE("cli: quadratic-field matrix round-trips through construct and verify") {
    const auto out = run_cli("--json construct sym_sigma_t1");
    REQUIRE(out.exit_code == 0);
    const json matrix = json::parse(out.out).at("results").at("matrix");
    CHECK(matrix.at("field").at("quad") == 6);
    const std::string arg = "'" + matrix.dump() + "'";
    const auto ver =
        run_cli("verify --matrix " + arg + R"( --spectrum '{"values": ["4","3","-2","-2","-2"]}')");
    CHECK(ver.exit_code == 0);
}

TEST_CASE("cli: roots emits isolating intervals around +-2") {
    const auto res = run_cli(R"(--json roots '["-4","0","1"]' --eps 1/100000)");
    REQUIRE(res.exit_code == 0);
    const json roots = json::parse(res.out).at("results").at("roots");
    REQUIRE(roots.size() == 2);
    auto mid = [](const json& iv) {
        return (Rational::from_string(iv.at("lo").get<std::string>()) +
                Rational::from_string(iv.at("hi").get<std::string>())) /
               R(2);
    };
    CHECK(abs(mid(roots[0]) + R(2)) < R(1, 10000));
    CHECK(abs(mid(roots[1]) - R(2)) < R(1, 10000));
}

TEST_CASE("cli: --eps is honored") {
    const auto res = run_cli("--json threshold lm_sigma_hat --eps 1/1000000000000");
    REQUIRE(res.exit_code == 0);
    const json iv = json::parse(res.out).at("results").at("threshold").at("interval");
    const Rational width = Rational::from_string(iv.at("hi").get<std::string>()) -
                           Rational::from_string(iv.at("lo").get<std::string>());
    CHECK(width <= R(1, 1000000000000L));
}

TEST_CASE("cli: human and JSON outputs carry identical numeric content") {
    const auto human = run_cli("threshold lm_sigma_hat");
    const auto machine = run_cli("--json threshold lm_sigma_hat");
    REQUIRE(machine.exit_code == 0);
    const json j = json::parse(machine.out);
    const std::string lo = j.at("results").at("threshold").at("interval").at("lo");
    const std::string hi = j.at("results").at("threshold").at("interval").at("hi");
    CHECK(human.out.find(lo) != std::string::npos);
    CHECK(human.out.find(hi) != std::string::npos);
    const std::string cf =
        j.at("results").at("threshold").at("closed_form_check").at("closed_form_decimal");
    CHECK(human.out.find(cf) != std::string::npos);
}

TEST_CASE("cli: --explain attaches fixed rationale strings") {
    const auto res = run_cli(R"(--json check '{"values": ["3","3","-2","-2","-2"]}' --explain)");
    const json j = json::parse(res.out);
    bool any_explained = false;
    for (const auto& cond : j.at("results").at("classification").at("conditions"))
        if (cond.contains("explain")) any_explained = true;
    CHECK(any_explained);
}

TEST_CASE("json: threshold and audit records serialize with decimal fields") {
    const ThresholdResult res = family_nonneg_threshold(family_lm_sigma_hat(), R(1, 1000000000L));
    const json j = to_json(res);
    CHECK(j.at("binding_entry").at("row") == 5);
    CHECK(j.at("binding_entry").at("col") == 2);
    CHECK(j.at("closed_form_check").at("agrees") == true);

    const json audit = to_json(sigma_t_extreme_audit());
    CHECK(audit.at("discrepancy") == true);
    CHECK(audit.at("reference") == "39671/100000");
    CHECK(audit.at("root_decimal").get<std::string>().substr(0, 6) == "0.4203");
}
