#include "vcert/certificate.hpp"
#include "vcert/closedforms.hpp"
#include "vcert/oracle.hpp"
#include "vcert/suites.hpp"
#include "vcert/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

struct RangeOpt {
    int lo = 0;
    int hi = 0;
};

RangeOpt parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("range", "expected the form a..b");
    RangeOpt r;
    r.lo = std::stoi(text.substr(0, dots));
    r.hi = std::stoi(text.substr(dots + 2));
    if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range");
    return r;
}

int print_results(const vcert::suites::Results& rs, bool json) {
    bool ok = vcert::suites::all_pass(rs);
    if (json) {
        ordered_json j = ordered_json::array();
        for (const auto& r : rs)
            j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : rs) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
            if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
            std::cout << "\n";
        }
    }
    return ok ? kExitOk : kExitMathFail;
}

int cmd_identity(const std::string& name, const std::string& range_m,
                 const std::string& range_p, int max_weight, bool json) {
    using namespace vcert::suites;
    Results rs;
    if (name == "associativity" || name == "aiuewy") {
        RangeOpt r = range_m.empty() ? RangeOpt{2, 5} : parse_range(range_m);
        rs = associativity_identity(r.lo, r.hi);
    } else if (name == "commutativity") {
        rs = commutativity_identity(max_weight > 0 ? max_weight : 6);
    } else if (name == "product" || name == "urjubas") {
        RangeOpt rm = range_m.empty() ? RangeOpt{3, 5} : parse_range(range_m);
        RangeOpt rp = range_p.empty() ? RangeOpt{2, 3} : parse_range(range_p);
        rs = product_closed_form(rm.lo, rm.hi, rp.lo, rp.hi);
    } else if (name == "shift") {
        rs = shift_identity(max_weight > 0 ? max_weight : 16);
    } else if (name == "parity") {
        rs = parity_vanishing(max_weight > 0 ? max_weight : 21);
    } else if (name == "confluence") {
        rs = word_confluence(max_weight > 0 ? max_weight : 16);
    } else if (name == "grading") {
        rs = grading_contracts(max_weight > 0 ? max_weight : 6);
    } else {
        std::cerr << "unknown identity: " << name << "\n"
                  << "known: associativity (aiuewy), commutativity, product (urjubas), "
                     "shift, parity, confluence, grading\n";
        return kExitUsage;
    }
    return print_results(rs, json);
}

ordered_json clin_json(const vcert::CLin& c) {
    return ordered_json{{"c0", vcert::to_string(c.a0)}, {"c1", vcert::to_string(c.a1)}};
}

int cmd_coeffs(int k, long m, bool json, const std::string& model_name_) {
    vcert::CorrectionModel model = model_name_ == "exact"
                                       ? vcert::CorrectionModel::Exact
                                       : vcert::CorrectionModel::Reference;
    vcert::InstanceSpec spec(k, m);
    vcert::CoeffQuad quad = vcert::instance_coefficients(spec, model);
    auto [xi, zeta] = vcert::xi_zeta(spec, model);
    if (json) {
        ordered_json j;
        j["k"] = k;
        j["m"] = m;
        j["model"] = vcert::model_name(model);
        j["alpha"] = clin_json(quad.alpha);
        j["beta"] = clin_json(quad.beta);
        j["gamma_prime"] = clin_json(quad.gamma_p);
        j["delta_prime"] = clin_json(quad.delta_p);
        j["xi"] = clin_json(xi);
        j["zeta"] = clin_json(zeta);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "instance k=" << k << " m=" << m << " (s=" << spec.s() << ", model "
                  << vcert::model_name(model) << ")\n";
        std::cout << "  alpha  = " << quad.alpha.str() << "\n";
        std::cout << "  beta   = " << quad.beta.str() << "\n";
        std::cout << "  gamma' = " << quad.gamma_p.str() << "\n";
        std::cout << "  delta' = " << quad.delta_p.str() << "\n";
        std::cout << "  xi     = " << xi.str() << "\n";
        std::cout << "  zeta   = " << zeta.str() << "\n";
    }
    return kExitOk;
}

int cmd_certify(long smax, const std::string& out, int threads) {
    vcert::Certificate cert = vcert::build_certificate(smax, threads);
    vcert::write_certificate(cert, out);
    std::cout << "certificate written to " << out << "\n";
    auto summary = [](const char* name, const vcert::ModelResult& mr, bool ref) {
        std::cout << name << ": f "
                  << (ref ? (mr.f_report.matches_reference ? "matches tables" : "DIVERGES")
                          : "recorded")
                  << ", shift-positivity " << (mr.f_report.shift_positive ? "ok" : "FAIL")
                  << ", scan 32..38 " << (mr.f_report.scan_32_38_nonzero ? "ok" : "FAIL")
                  << ", witnesses " << mr.witnesses.size() << "\n";
    };
    summary("reference model", cert.reference, true);
    summary("exact model    ", cert.exact, false);
    std::cout << "witness table (reference model):\n";
    for (const auto& w : cert.reference.witnesses)
        std::cout << "  s=" << w.s << "  k=" << w.k
                  << "  G_k(s-18)=" << vcert::to_string(w.g_value) << "\n";
    std::cout << (cert.all_checks_pass ? "ALL CHECKS PASS" : "CHECKS FAILED") << "\n";
    return cert.all_checks_pass ? kExitOk : kExitMathFail;
}

int cmd_oracle(const std::string& rule, int max_weight, int degree_cap, bool specialize,
               bool json) {
    std::vector<std::string> rules;
    if (rule == "all")
        rules = vcert::oracle::all_rules();
    else if (rule == "product" || rule == "uaygsdf")
        rules = {"product_reading1", "product_reading2"};
    else
        rules.push_back(rule);

    std::vector<vcert::oracle::RuleReport> reports;
    for (const auto& r : rules) {
        auto rs = vcert::oracle::verify_rule(r, max_weight, degree_cap);
        reports.insert(reports.end(), rs.begin(), rs.end());
    }
    if (specialize) {
        auto rs = vcert::oracle::verify_rules_specialized(rules, max_weight, degree_cap);
        reports.insert(reports.end(), rs.begin(), rs.end());
    }

    bool all_ok = true;
    std::size_t passed = 0;
    for (const auto& r : reports) {
        // readings of the product identity report which one verifies instead
        // of failing the run
        if (r.rule == "product_reading1" || r.rule == "product_reading2") continue;
        all_ok = all_ok && r.pass;
        passed += r.pass;
    }
    std::map<std::string, std::pair<int, int>> reading_tally;
    for (const auto& r : reports)
        if (r.rule == "product_reading1" || r.rule == "product_reading2") {
            auto& t = reading_tally[r.rule];
            t.first += r.pass;
            t.second += 1;
        }

    if (json) {
        ordered_json j = ordered_json::array();
        for (const auto& r : reports)
            j.push_back({{"rule", r.rule},
                         {"params", r.params},
                         {"pass", r.pass},
                         {"note", r.note}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports)
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.rule << "(" << r.params
                      << ")" << (r.note.empty() ? "" : "  [" + r.note + "]") << "\n";
        for (const auto& [name, tally] : reading_tally) {
            std::cout << name << ": " << tally.first << "/" << tally.second
                      << " instances verify\n";
            if (tally.first == tally.second)
                std::cout << "  -> this reading of the second coefficient verifies\n";
        }
    }
    if (!reading_tally.empty()) {
        bool some_reading_ok = false;
        for (const auto& [name, tally] : reading_tally)
            some_reading_ok = some_reading_ok || tally.first == tally.second;
        if (!some_reading_ok) {
            std::cerr << "neither coefficient reading verifies\n";
            return kExitMathFail;
        }
    }
    return all_ok ? kExitOk : kExitMathFail;
}

int cmd_appendix(long m_max, bool json) {
    using namespace vcert;
    suites::Results rs;
    const auto model = CorrectionModel::Reference;

    bool closed_ok = true;
    std::string bad;
    for (int k = 0; k <= 2 && closed_ok; ++k)
        for (long m = 14; m <= m_max; m += 2) {
            auto [xi, zeta] = xi_zeta(InstanceSpec(k, m), model);
            if (xi.a0 != closed_forms::xi_closed(k, m) ||
                !(zeta == closed_forms::zeta_closed(k, m))) {
                closed_ok = false;
                bad = "k=" + std::to_string(k) + " m=" + std::to_string(m);
                break;
            }
        }
    rs.push_back({"xi/zeta closed forms, even m in [14, " + std::to_string(m_max) + "]",
                  closed_ok, bad});

    bool inter_ok = true;
    for (long m = 14; m <= 26; m += 2) {
        auto quad = instance_coefficients(InstanceSpec(0, m), model);
        inter_ok = inter_ok && quad.alpha.a0 == closed_forms::alpha0(m) &&
                   quad.gamma_p.a0 == closed_forms::gamma0_prime(m) &&
                   quad.beta.a1 == closed_forms::beta0_c1(m);
    }
    rs.push_back({"alpha0 / gamma0' / beta0 c-part closed forms", inter_ok, ""});

    std::vector<long> fit, holdout;
    for (int i = 0; i < 25; ++i) fit.push_back(14 + 2 * i);
    for (int i = 0; i < 15; ++i) holdout.push_back(64 + 2 * i);
    std::array<InstancePolys, 3> polys;
    bool poly_ok = true;
    for (int k = 0; k < 3; ++k) {
        polys[k] = reconstruct_polynomials(k, fit, holdout, model);
        poly_ok = poly_ok && polys[k].xi == closed_forms::xi_poly(k) &&
                  polys[k].zeta == closed_forms::zeta_poly(k);
    }
    rs.push_back({"reconstructed polynomials match expanded closed forms", poly_ok, ""});

    DetResult det = determinant_resultants(polys);
    FReport fr = verify_f(det.f);
    rs.push_back({"determinant resultants share tabulated f", fr.matches_reference, ""});
    rs.push_back({"f(m+39) has positive coefficients", fr.shift_positive, ""});
    rs.push_back({"f nonzero on 32..38", fr.scan_32_38_nonzero, ""});

    return print_results(rs, json);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Virasoro orbifold calculus and certificate pipeline"};
    app.set_version_flag("--version", vcert::kVersion);
    app.require_subcommand(1);

    auto* identity = app.add_subcommand("identity", "run an engine identity suite");
    std::string id_name, id_range, id_p_range;
    int id_maxw = 0;
    bool id_json = false;
    identity->add_option("name", id_name, "identity name")->required();
    identity->add_option("--range,--m", id_range, "m-range a..b");
    identity->add_option("--p", id_p_range, "p-range a..b");
    identity->add_option("--max-weight", id_maxw, "weight bound");
    identity->add_flag("--json", id_json, "machine-readable report");

    auto* coeffs = app.add_subcommand("coeffs", "print instance coefficients");
    int co_k = 0;
    long co_m = 14;
    bool co_json = false;
    std::string co_model = "reference";
    coeffs->add_option("--k", co_k, "family index, 0..2")->required();
    coeffs->add_option("--m", co_m, "even instance parameter >= 14")->required();
    coeffs->add_option("--model", co_model, "exact | reference")
        ->check(CLI::IsMember({"exact", "reference"}));
    coeffs->add_flag("--json", co_json, "machine-readable report");

    auto* certify = app.add_subcommand("certify", "build and write the certificate");
    long smax = 100;
    std::string out_path = "cert.json";
    int threads = 0;
    certify->add_option("--smax", smax, "largest even s, >= 32");
    certify->add_option("--out", out_path, "output path");
    certify->add_option("--threads", threads, "worker threads (default: VCERT_THREADS)");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force rule verification");
    std::string rule = "all";
    int maxw = 10, cap = vcert::oracle::kDefaultDegreeCap;
    bool specialize = false, or_json = false;
    oracle_cmd->add_option("--rule", rule, "rule name or 'all'");
    oracle_cmd->add_option("--max-weight", maxw, "largest total weight");
    oracle_cmd->add_option("--degree-cap", cap, "hard degree cap");
    oracle_cmd->add_flag("--specialize", specialize, "also re-check at fixed charges");
    oracle_cmd->add_flag("--json", or_json, "machine-readable report");

    auto* appendix = app.add_subcommand("appendix", "compare against the closed-form tables");
    long ap_mmax = 62;
    bool ap_json = false;
    appendix->add_option("--mmax", ap_mmax, "largest even m");
    appendix->add_flag("--json", ap_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (identity->parsed())
            return cmd_identity(id_name, id_range, id_p_range, id_maxw, id_json);
        if (coeffs->parsed()) {
            if (co_m % 2 != 0 || co_m < 14 || co_k < 0 || co_k > 2) {
                std::cerr << "coeffs: need k in 0..2 and even m >= 14\n";
                return kExitUsage;
            }
            return cmd_coeffs(co_k, co_m, co_json, co_model);
        }
        if (certify->parsed()) {
            if (smax < 32 || smax % 2 != 0) {
                std::cerr << "certify: --smax must be even and >= 32\n";
                return kExitUsage;
            }
            return cmd_certify(smax, out_path, threads);
        }
        if (oracle_cmd->parsed()) {
            if (maxw > cap) {
                std::cerr << "oracle: refusing max weight " << maxw
                          << " above the degree cap " << cap
                          << " (raise --degree-cap at your own expense)\n";
                return kExitUsage;
            }
            return cmd_oracle(rule, maxw, cap, specialize, or_json);
        }
        if (appendix->parsed()) {
            if (ap_mmax < 14 || ap_mmax % 2 != 0) {
                std::cerr << "appendix: --mmax must be even and >= 14\n";
                return kExitUsage;
            }
            return cmd_appendix(ap_mmax, ap_json);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const vcert::MathError& e) {
        std::cerr << "mathematical check failed: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    }
    return kExitUsage;
}
