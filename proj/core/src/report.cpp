#include "qcong/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include <json.hpp>

namespace qcong {

namespace {

using json = nlohmann::ordered_json;

// Laurent value at q = 2 as an exact rational.
mpq_class value_at_two(const LaurentInt &p)
{
    mpq_class v(p.base().eval(2));
    if (p.shift() >= 0) {
        v *= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(p.shift()));
    } else {
        v /= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(-p.shift()));
    }
    v.canonicalize();
    return v;
}

json poly_json(const PolyValue &pv, bool full)
{
    json j;
    const LaurentInt &p = pv.poly;
    if (full) {
        j["shift"] = p.shift();
        json coeffs = json::array();
        for (const auto &c : p.base().coeffs()) {
            coeffs.push_back(c.get_str());
        }
        j["coeffs"] = std::move(coeffs);
    } else {
        j["degree"] = p.is_zero() ? json(nullptr) : json(p.top_degree());
        j["low_degree"] = p.is_zero() ? json(nullptr) : json(p.shift());
        j["content"] = content(p).get_str();
        j["at1"] = eval_at_one(p).get_str();
        j["at2"] = value_at_two(p).get_str();
    }
    if (!pv.factored.empty()) {
        j["factored"] = pv.factored;
    }
    return j;
}

json value_json(const Value &v, bool full)
{
    if (const auto *s = std::get_if<std::string>(&v)) {
        return *s;
    }
    return poly_json(std::get<PolyValue>(v), full);
}

json params_json(const VerdictParams &p)
{
    json j = json::object();
    auto put = [&j](const char *k, const std::optional<std::int64_t> &x) {
        if (x) {
            j[k] = *x;
        }
    };
    put("r", p.r);
    put("m", p.m);
    put("n", p.n);
    put("rho", p.rho);
    put("d", p.d);
    put("h", p.h);
    return j;
}

json spec_json(const SweepSpec &s)
{
    json claims = json::array();
    for (ClaimGroup g : s.claims) {
        claims.push_back(to_string(g));
    }
    return json{{"claims", claims},       {"r", s.r.to_string()},       {"m", s.m.to_string()},
                {"rho", s.rho.to_string()}, {"n", s.n.to_string()},     {"d_max", s.d_max},
                {"fail_fast", s.fail_fast}, {"full_polys", s.full_polys}};
}

std::string utc_now()
{
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string opt_str(const std::optional<std::int64_t> &x)
{
    return x ? std::to_string(*x) : "";
}

std::string witness_str(const Verdict &v, bool full)
{
    std::string s;
    for (const auto &[k, val] : v.witness) {
        s += (s.empty() ? "" : "; ") + k + "=" + render_value(val, full);
    }
    return s;
}

std::string render_json(const SweepSpec &spec, const SweepResult &res)
{
    json j;
    j["spec"] = spec_json(spec);
    j["counts"] = {{"pass", res.passed()}, {"fail", res.failed()}, {"skip", res.skipped}};
    if (res.truncated) {
        j["truncated"] = true;
    }
    json verdicts = json::array();
    for (const auto &v : res.verdicts) {
        json jv;
        jv["claim"] = v.claim;
        jv["params"] = params_json(v.params);
        jv["pass"] = v.pass;
        jv["lhs"] = value_json(v.lhs, spec.full_polys);
        jv["rhs"] = value_json(v.rhs, spec.full_polys);
        if (!v.witness.empty()) {
            json w = json::object();
            for (const auto &[k, val] : v.witness) {
                w[k] = value_json(val, spec.full_polys);
            }
            jv["witness"] = std::move(w);
        }
        verdicts.push_back(std::move(jv));
    }
    j["verdicts"] = std::move(verdicts);
    if (spec.timestamp) {
        j["timestamp"] = utc_now();
    }
    return j.dump(2) + "\n";
}

std::string render_csv(const SweepSpec &spec, const SweepResult &res)
{
    std::ostringstream os;
    os << "claim,r,m,n,rho,d,h,pass,lhs,rhs,witness\n";
    for (const auto &v : res.verdicts) {
        const auto &p = v.params;
        os << csv_field(v.claim) << ',' << opt_str(p.r) << ',' << opt_str(p.m) << ',' << opt_str(p.n) << ','
           << opt_str(p.rho) << ',' << opt_str(p.d) << ',' << opt_str(p.h) << ',' << (v.pass ? "true" : "false")
           << ',' << csv_field(render_value(v.lhs, spec.full_polys)) << ','
           << csv_field(render_value(v.rhs, spec.full_polys)) << ','
           << csv_field(witness_str(v, spec.full_polys)) << '\n';
    }
    return os.str();
}

std::string render_text(const SweepSpec &spec, const SweepResult &res)
{
    std::ostringstream os;
    for (const auto &v : res.verdicts) {
        os << render_verdict_line(v, spec.full_polys) << '\n';
    }
    os << "pass=" << res.passed() << " fail=" << res.failed() << " skip=" << res.skipped;
    if (res.truncated) {
        os << " (stopped at first failure)";
    }
    os << '\n';
    if (spec.timestamp) {
        os << "timestamp=" << utc_now() << '\n';
    }
    return os.str();
}

} // namespace

std::string render_value(const Value &v, bool full_polys)
{
    if (const auto *s = std::get_if<std::string>(&v)) {
        return *s;
    }
    const auto &pv = std::get<PolyValue>(v);
    std::string out;
    if (full_polys) {
        out = pv.poly.to_string();
    } else if (pv.poly.is_zero()) {
        out = "0";
    } else {
        out = "deg=" + std::to_string(pv.poly.top_degree()) + ",low=" + std::to_string(pv.poly.shift()) +
              ",content=" + content(pv.poly).get_str() + ",at1=" + eval_at_one(pv.poly).get_str() +
              ",at2=" + value_at_two(pv.poly).get_str();
    }
    if (!pv.factored.empty()) {
        out += " [" + pv.factored + "]";
    }
    return out;
}

std::string render_verdict_line(const Verdict &v, bool full_polys)
{
    std::string line = std::string(v.pass ? "PASS " : "FAIL ") + v.claim;
    const std::string params = v.params.to_string();
    if (!params.empty()) {
        line += " " + params;
    }
    line += " lhs=" + render_value(v.lhs, full_polys) + " rhs=" + render_value(v.rhs, full_polys);
    const std::string w = witness_str(v, full_polys);
    if (!w.empty() && !v.pass) {
        line += " witness: " + w;
    }
    return line;
}

std::string render_report(const SweepSpec &spec, const SweepResult &result)
{
    switch (spec.format) {
    case Format::kJson: return render_json(spec, result);
    case Format::kCsv: return render_csv(spec, result);
    case Format::kText: break;
    }
    return render_text(spec, result);
}

} // namespace qcong
