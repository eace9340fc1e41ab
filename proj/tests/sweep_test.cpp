#include <doctest.h>

#include <json.hpp>

#include "qcong/report.hpp"
#include "qcong/sweep.hpp"

using namespace qcong;
using nlohmann::json;

namespace {

SweepSpec spec_for(const std::string &claims)
{
    SweepSpec s;
    s.claims = parse_claim_groups(claims);
    s.timestamp = false;
    s.jobs = 1;
    return s;
}

std::size_t count_lines(const std::string &s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_SUITE("sweep")
{
    TEST_CASE("range parsing")
    {
        CHECK(Range::parse("7") == Range{7, 7});
        CHECK(Range::parse("-6..6") == Range{-6, 6});
        CHECK(Range::parse("2..300").to_string() == "2..300");
        CHECK_THROWS_AS(Range::parse("5..2"), std::invalid_argument);
        CHECK_THROWS_AS(Range::parse("x"), std::invalid_argument);
        CHECK_THROWS_AS(Range::parse("1..2..3"), std::invalid_argument);
        CHECK_THROWS_AS(Range::parse(""), std::invalid_argument);
    }

    TEST_CASE("claim groups")
    {
        CHECK(parse_claim_groups("all").size() == 6);
        CHECK(parse_claim_groups("sun") == std::vector<ClaimGroup>{ClaimGroup::kSun});
        CHECK_THROWS_AS(parse_claim_groups("lemma"), std::invalid_argument);
        CHECK(parse_format("csv") == Format::kCsv);
        CHECK_FALSE(parse_format("xml").has_value());
    }

    TEST_CASE("corollary2 grid size")
    {
        SweepSpec s = spec_for("corollary2");
        s.rho = {2, 3};
        s.n = {2, 50};
        const SweepResult res = run_sweep(s);
        CHECK(res.verdicts.size() == 98);
        CHECK(res.failed() == 0);
        CHECK(exit_code(res) == kExitPass);
    }

    TEST_CASE("non-coprime pairs are skipped and counted")
    {
        SweepSpec s = spec_for("theorem1");
        s.r = {5, 5};
        s.m = {5, 5};
        s.n = {1, 4};
        const SweepResult res = run_sweep(s);
        CHECK(res.verdicts.empty());
        CHECK(res.skipped == 4);
        CHECK(exit_code(res) == kExitPass);
    }

    TEST_CASE("invalid specs are rejected")
    {
        SweepSpec s = spec_for("theorem1");
        s.n = {0, 3};
        CHECK_THROWS_AS(run_sweep(s), std::invalid_argument);
        s = spec_for("lemmas");
        s.d_max = 1;
        CHECK_THROWS_AS(run_sweep(s), std::invalid_argument);
        SweepSpec empty;
        CHECK_THROWS_AS(run_sweep(empty), std::invalid_argument);
    }

    TEST_CASE("output does not depend on the thread count")
    {
        SweepSpec s = spec_for("all");
        s.r = {-3, 3};
        s.m = {2, 3};
        s.rho = {1, 2};
        s.n = {1, 6};
        s.d_max = 9;
        s.format = Format::kJson;
        const std::string one = render_report(s, run_sweep(s));
        s.jobs = 4;
        const std::string four = render_report(s, run_sweep(s));
        CHECK(one == four);
        s.format = Format::kCsv;
        s.fail_fast = true;
        const std::string csv_a = render_report(s, run_sweep(s));
        s.jobs = 3;
        CHECK(csv_a == render_report(s, run_sweep(s)));
    }

    TEST_CASE("exit codes")
    {
        SweepResult res;
        res.verdicts.push_back(Verdict{"sun", {}, false, "", "", {}});
        CHECK(exit_code(res) == kExitConjectureCounterexample);
        res.verdicts.push_back(Verdict{"theorem1", {}, false, "", "", {}});
        CHECK(exit_code(res) == kExitProvenFailure);
        res.verdicts.clear();
        res.verdicts.push_back(Verdict{"qcong", {}, true, "", "", {}});
        CHECK(exit_code(res) == kExitPass);
    }

    TEST_CASE("json schema")
    {
        SweepSpec s = spec_for("qcong");
        s.n = {3, 3};
        s.format = Format::kJson;
        const json j = json::parse(render_report(s, run_sweep(s)));
        CHECK(j.at("counts").at("pass") == 2);
        CHECK(j.at("counts").at("fail") == 0);
        CHECK(j.at("counts").at("skip") == 0);
        CHECK_FALSE(j.contains("timestamp"));
        const json &v = j.at("verdicts").at(0);
        CHECK(v.at("claim") == "qcong");
        CHECK(v.at("params") == json{{"r", 1}, {"m", 2}, {"n", 3}, {"rho", 1}});
        CHECK(v.at("pass") == true);
        CHECK(v.at("rhs").at("factored") == "Phi_3*Phi_5");
        CHECK(v.at("rhs").at("at1") == "15");
        CHECK(v.at("rhs").at("degree") == 6);

        s.full_polys = true;
        const json full = json::parse(render_report(s, run_sweep(s)));
        // Phi_3 Phi_5 = 1 + 2q + 3q^2 + 3q^3 + 3q^4 + 2q^5 + q^6
        CHECK(full.at("verdicts").at(0).at("rhs").at("coeffs") ==
              json::array({"1", "2", "3", "3", "3", "2", "1"}));
        CHECK(full.at("verdicts").at(0).at("rhs").at("shift") == 0);

        s.timestamp = true;
        CHECK(json::parse(render_report(s, run_sweep(s))).contains("timestamp"));
    }

    TEST_CASE("csv and text layouts")
    {
        SweepSpec s = spec_for("corollary2");
        s.rho = {2, 2};
        s.n = {2, 4};
        s.format = Format::kCsv;
        const std::string csv = render_report(s, run_sweep(s));
        CHECK(csv.rfind("claim,r,m,n,rho,d,h,pass,lhs,rhs,witness\n", 0) == 0);
        CHECK(count_lines(csv) == 4);
        CHECK(csv.find("corollary2,,,3,2,,,true,900,60,") != std::string::npos);
        s.format = Format::kText;
        const std::string text = render_report(s, run_sweep(s));
        CHECK(text.find("PASS corollary2 n=3 rho=2 lhs=900 rhs=60") != std::string::npos);
        CHECK(text.find("pass=3 fail=0 skip=0") != std::string::npos);
    }
}
