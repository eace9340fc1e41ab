// qcong: inspect the cyclotomic constructs and run verifier sweeps.
//
//   qcong show A --r 1 --m 2 --n 3
//   qcong verify corollary2 --rho 2..3 --n 2..50 --format json --no-timestamp

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcong/constructs.hpp"
#include "qcong/cyclotomic.hpp"
#include "qcong/report.hpp"
#include "qcong/sweep.hpp"

namespace {

using namespace qcong;

std::string phi_product(const FactoredQ &f)
{
    std::string s;
    for (const auto &[d, e] : f.factors()) {
        if (!s.empty()) {
            s += "·";
        }
        s += "Φ_" + std::to_string(d);
        if (e != 1) {
            s += "^" + std::to_string(e);
        }
    }
    return s.empty() ? "1" : s;
}

std::string show_factored(const FactoredQ &f, const std::string &name)
{
    return phi_product(f) + " = " + expand_laurent(f).to_string() + "; " + name + "(1)=" + value_at_one(f).get_str();
}

struct ShowArgs {
    std::string object;
    std::int64_t r = 1, m = 2, n = 1, d = 2;
};

std::string run_show(const ShowArgs &a)
{
    if (a.object == "phi") {
        const IntPoly &p = phi(a.d);
        return "Φ_" + std::to_string(a.d) + " = " + p.to_string() + "; Φ_" + std::to_string(a.d) +
               "(1)=" + eval_at_one(p).get_str();
    }
    if (a.object == "lambda") {
        return std::to_string(lambda(a.r, a.m, a.d));
    }
    if (a.object == "sset") {
        std::string s;
        for (auto d : s_set(a.r, a.m, a.n)) {
            s += (s.empty() ? "" : ",") + std::to_string(d);
        }
        return "{" + s + "}";
    }
    if (a.object == "A") {
        return show_factored(a_factored(a.r, a.m, a.n), "A");
    }
    if (a.object == "B") {
        return show_factored(b_factored(a.m, a.n), "B");
    }
    if (a.object == "C") {
        return show_factored(c_factored(a.m, a.n), "C");
    }
    if (a.object == "N") {
        return n_alpha(a.r, a.m, a.n).get_str();
    }
    throw CLI::ValidationError("object", "unknown object '" + a.object + "'");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact checks of binomial-sum divisibility and q-congruences"};
    app.require_subcommand(1);

    ShowArgs show;
    auto *show_cmd = app.add_subcommand("show", "Print a construct in expanded and factored form");
    show_cmd->add_option("object", show.object, "phi | lambda | sset | A | B | C | N")
        ->required()
        ->check(CLI::IsMember({"phi", "lambda", "sset", "A", "B", "C", "N"}));
    show_cmd->add_option("--r", show.r, "Numerator r");
    show_cmd->add_option("--m", show.m, "Denominator m");
    show_cmd->add_option("--n", show.n, "Length n");
    show_cmd->add_option("--d", show.d, "Cyclotomic index d");

    std::vector<std::string> claims;
    std::string r = "1", m = "2", rho = "1", n = "1..10", format = "text", out;
    SweepSpec spec;
    bool no_timestamp = false;
    auto *verify_cmd = app.add_subcommand("verify", "Run verifier sweeps and print a report");
    verify_cmd->add_option("claims", claims, "theorem1 | corollary2 | qcong | lemmas | identities | 2adic | sun | all")
        ->required();
    verify_cmd->add_option("--r", r, "r or a range a..b");
    verify_cmd->add_option("--m", m, "m or a range a..b");
    verify_cmd->add_option("--rho", rho, "rho or a range a..b");
    verify_cmd->add_option("--n", n, "n or a range a..b");
    verify_cmd->add_option("--d-max", spec.d_max, "Largest d for per-d checks");
    verify_cmd->add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    verify_cmd->add_option("--jobs", spec.jobs, "Worker threads (default: core count)");
    verify_cmd->add_flag("--fail-fast", spec.fail_fast, "Stop at the first failing verdict");
    verify_cmd->add_flag("--full-polys", spec.full_polys, "Print full coefficient lists");
    verify_cmd->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp field");
    verify_cmd->add_option("--out", out, "Write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    if (show_cmd->parsed()) {
        try {
            std::cout << run_show(show) << '\n';
        } catch (const std::exception &e) {
            std::cerr << "qcong show: " << e.what() << '\n';
            return kExitUsage;
        }
        return kExitPass;
    }

    try {
        for (const auto &c : claims) {
            for (ClaimGroup g : parse_claim_groups(c)) {
                spec.claims.push_back(g);
            }
        }
        spec.r = Range::parse(r);
        spec.m = Range::parse(m);
        spec.rho = Range::parse(rho);
        spec.n = Range::parse(n);
        spec.format = *parse_format(format);
        spec.timestamp = !no_timestamp;
        spec.validate();
    } catch (const std::invalid_argument &e) {
        std::cerr << "qcong verify: " << e.what() << '\n';
        return kExitUsage;
    }

    const SweepResult result = run_sweep(spec);
    const std::string report = render_report(spec, result);
    if (out.empty()) {
        std::cout << report;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) {
            std::cerr << "qcong verify: cannot write " << out << '\n';
            return kExitUsage;
        }
        f << report;
    }
    return exit_code(result);
}
