#include "vcert/certificate.hpp"
#include "vcert/closedforms.hpp"
#include "vcert/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <thread>

namespace vcert {

namespace {

int thread_budget(int requested, std::size_t tasks) {
    int n = requested;
    if (n <= 0) {
        if (const char* env = std::getenv("VCERT_THREADS")) n = std::atoi(env);
        if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
        if (n <= 0) n = 1;
    }
    return std::max(1, std::min<int>(n, static_cast<int>(tasks)));
}

// Evaluates fn(i) for i in [0, tasks) on a bounded thread pool; results land
// in index order, so assembly is deterministic regardless of scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t tasks, int threads, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(tasks);
    const int nthreads = thread_budget(threads, tasks);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < tasks; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(nthreads);
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next.fetch_add(1); i < tasks; i = next.fetch_add(1))
                    out[i] = fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

void add_word(CState& s, std::vector<int> word, const CLin& coeff) {
    if (coeff.is_zero()) return;
    CState w = normal_order<CLin>(std::span<const int>(word.data(), word.size()));
    for (const auto& [m, c] : w.terms()) s.add(m, c * coeff);
}

} // namespace

CState correction_template(long m, long n, long p, long q, bool as_tabulated) {
    CState s;
    const auto cc = [&](long i) { return c_coeff(m - 1, n - 1, i); };
    add_word(s, {int(-m), int(-n), int(-p), int(-q)}, CLin(Rat(1)));
    for (long i = 0; i < p; ++i)
        add_word(s, {int(-(m + n - 1 + i)), int(-q), int(-(p + 1 - i))},
                 CLin(cc(i) * rat(p + i - 1)));
    for (long i = 0; i < q; ++i)
        add_word(s, {int(-(m + n - 1 + i)), int(-p), int(-(q + 1 - i))},
                 CLin(cc(i) * rat(q + i - 1)));
    for (long i = 0; i < p + q; ++i)
        add_word(s, {int(-(m + n - 1 + i)), int(-(p + q + 1 - i))},
                 CLin(cc(i) * rat(p + i - 1) * rat(q + i - p - 1)));
    const Rat b_p = binomial(p + 1, 3), b_q = binomial(q + 1, 3);
    add_word(s, {int(-(m + n + p)), int(-q)},
             CLin::c_times(cc(p + 1) * (as_tabulated ? b_q : b_p) / 2));
    add_word(s, {int(-(m + n + q)), int(-p)},
             CLin::c_times(cc(q + 1) * (as_tabulated ? b_p : b_q) / 2));
    add_word(s, {int(-(m + n + p + q))},
             CLin::c_times(cc(p + q + 1) * rat(2 * p + q) * b_q / 2));
    return s;
}

namespace {

// Relation read-off for the word L_{-M} L_{-N} L_{-P} L_{-Q} 1 with M+N odd:
// returns (A, B) with 2 eta-bar(word) + A B2(s-4) + B B1(s-2) = 0.
std::pair<CLin, CLin> route(long M, long N, long P, long Q, CorrectionModel model) {
    const long s = M + N + P + Q;
    if (M <= N) throw std::invalid_argument("route: needs M > N");

    const CState a(Monomial::from_sorted({int(M), int(N)}), CLin(Rat(1)));
    if (!eta_reduce(a).is_zero())
        throw MathError("route: product term eta(L_{-M}L_{-N}1) did not vanish by parity");

    const CState b(Monomial::from_sorted({int(P), int(Q)}), CLin(Rat(1)));
    CState corr;
    if (model == CorrectionModel::Exact) {
        corr = nth_product(a, -1, b) - apply_mode(int(-M), apply_mode(int(-N), b));
    } else {
        CState word = apply_mode(int(-M), apply_mode(int(-N), b));
        corr = correction_template(M, N, P, Q, /*as_tabulated=*/true) - word;
    }
    const CState tail = apply_mode(int(-(M + N)), b);

    EtaVec v = eta_reduce(corr) + rat(M - N) * eta_reduce(tail);

    const EtaKey kb2 = EtaKey::b2(int(s - 4));
    const EtaKey kb1 = EtaKey::b1(int(s - 2));
    for (const auto& [key, c] : v.terms())
        if (key != kb2 && key != kb1)
            throw MathError("route: residue outside {B2(s-4), B1(s-2)}: " + key.str());
    return {v.coeff(kb2), v.coeff(kb1)};
}

} // namespace

CoeffQuad instance_coefficients(const InstanceSpec& spec, CorrectionModel model) {
    const long m = spec.m, n = spec.n(), p = spec.p(), q = spec.q();
    auto [alpha, beta] = route(m, n, p, q, model);
    auto [gamma, delta] = route(m, p, n, q, model);

    // L_{-m}L_{-p}L_{-n}L_{-q}1 = L_{-m}L_{-n}L_{-p}L_{-q}1 + (n-p) L_{-m}L_{-n-p}L_{-q}1
    CState conv_word = normal_order<CLin>({int(-m), int(-(n + p)), int(-q)});
    EtaVec conv = eta_reduce(conv_word);
    const long s = spec.s();
    CLin gamma_p = gamma + rat(2 * (n - p)) * conv.coeff(EtaKey::b2(int(s - 4)));
    CLin delta_p = delta + rat(2 * (n - p)) * conv.coeff(EtaKey::b1(int(s - 2)));

    CoeffQuad quad{alpha, beta, gamma_p, delta_p};
    if (!quad.alpha.c_free() || !quad.gamma_p.c_free())
        throw MathError("instance_coefficients: alpha or gamma' acquired a c-part");
    return quad;
}

std::pair<CLin, CLin> xi_zeta(const InstanceSpec& spec, CorrectionModel model) {
    CoeffQuad quad = instance_coefficients(spec, model);
    CLin xi = quad.alpha - quad.gamma_p;
    CLin zeta = quad.beta - quad.delta_p;
    if (!xi.c_free()) throw MathError("xi acquired a c-part");
    return {xi, zeta};
}

InstancePolys reconstruct_polynomials(int k, const std::vector<long>& fit_nodes,
                                      const std::vector<long>& holdout_nodes,
                                      CorrectionModel model) {
    if (fit_nodes.size() < 25)
        throw std::invalid_argument("reconstruct_polynomials: needs >= 25 fit nodes");
    if (holdout_nodes.size() < 15)
        throw std::invalid_argument("reconstruct_polynomials: needs >= 15 holdout nodes");
    for (long m : fit_nodes)
        for (long h : holdout_nodes)
            if (m == h)
                throw std::invalid_argument("reconstruct_polynomials: fit and holdout nodes overlap");

    auto eval_at = [&](long m) { return xi_zeta(InstanceSpec(k, m), model); };

    std::vector<std::pair<Int, Rat>> sx, s0, s1;
    for (long m : fit_nodes) {
        auto [xi, zeta] = eval_at(m);
        sx.emplace_back(Int(m), xi.a0);
        s0.emplace_back(Int(m), zeta.a0);
        s1.emplace_back(Int(m), zeta.a1);
    }
    InstancePolys out{poly_interpolate(sx), {poly_interpolate(s0), poly_interpolate(s1)}};
    if (out.xi.degree() > 24 || out.zeta.p0.degree() > 24 || out.zeta.p1.degree() > 24)
        throw MathError("reconstruct_polynomials: interpolant degree exceeds 24");

    for (long m : holdout_nodes) {
        auto [xi, zeta] = eval_at(m);
        if (out.xi.eval(m) != xi.a0 || out.zeta.p0.eval(m) != zeta.a0 ||
            out.zeta.p1.eval(m) != zeta.a1)
            throw MathError("reconstruct_polynomials: holdout mismatch at m = " +
                            std::to_string(m));
    }
    return out;
}

DetResult determinant_resultants(const std::array<InstancePolys, 3>& polys) {
    DetResult res;
    for (int k = 0; k < 3; ++k) {
        const int k2 = (k + 1) % 3;
        res.p[k] = polys[k].xi * polys[k2].zeta.p0 - polys[k2].xi * polys[k].zeta.p0;
        res.q[k] = polys[k].xi * polys[k2].zeta.p1 - polys[k2].xi * polys[k].zeta.p1;
    }
    std::array<PolyM, 3> residual;
    for (int k = 0; k < 3; ++k) {
        const int k2 = (k + 1) % 3;
        res.G[k] = res.p[k] * res.q[k2] - res.p[k2] * res.q[k];
        if (res.G[k].is_zero())
            throw MathError("determinant_resultants: G_" + std::to_string(k) + " is zero");
        PolyM g = res.G[k];
        for (int r = -2; r <= 18; ++r) {
            int e = 0;
            while (g.eval(-r) == 0) {
                g = g.divexact(Poly::linear(rat(r)));
                ++e;
            }
            if (e > 0) res.exponents[k][r] = e;
        }
        residual[k] = g;
    }
    res.f = residual[0].primitive_part();
    for (int k = 0; k < 3; ++k) {
        res.constant[k] = residual[k].leading() / res.f.leading();
        if (res.constant[k] == 0 || !(res.f * res.constant[k] == residual[k]))
            throw MathError("determinant_resultants: residual factors differ across k");
        long total = res.f.degree();
        for (const auto& [r, e] : res.exponents[k]) total += e;
        if (total != res.G[k].degree())
            throw MathError("determinant_resultants: degree bookkeeping failed");
    }
    return res;
}

FReport verify_f(const PolyM& f, bool check_reference) {
    FReport rep;
    rep.matches_reference = !check_reference || f == closed_forms::f_poly();
    PolyM shifted = f.taylor_shift(rat(39));
    rep.shift_positive = !shifted.is_zero();
    for (const auto& c : shifted.coeffs())
        if (c <= 0) rep.shift_positive = false;
    rep.scan_32_38_nonzero = true;
    for (long m = 32; m <= 38; ++m) {
        rep.scan_values.push_back(f.eval(m));
        if (rep.scan_values.back() == 0) rep.scan_32_38_nonzero = false;
    }
    return rep;
}

Rat minimal_central_charge(long p, long q) {
    if (p < 2 || q < 2) throw std::invalid_argument("minimal_central_charge: p, q >= 2");
    return rat(1) - rat(6 * (p - q) * (p - q), p * q);
}

bool rank_argument_holds(const DetResult& det, long m_lo, long m_hi,
                         const std::vector<Rat>& extra_charges) {
    std::vector<Rat> charges = {Rat(0), minimal_central_charge(2, 5)};
    charges.insert(charges.end(), extra_charges.begin(), extra_charges.end());
    for (long m = m_lo; m <= m_hi; m += 2) {
        for (const auto& c : charges) {
            bool some_nonzero = false;
            for (int k = 0; k < 3 && !some_nonzero; ++k)
                some_nonzero = det.p[k].eval(m) + det.q[k].eval(m) * c != 0;
            if (!some_nonzero) return false;
        }
    }
    return true;
}

namespace {

std::vector<Witness> find_witnesses(const DetResult& det, long s_max) {
    std::vector<Witness> ws;
    for (long s = 32; s <= s_max; s += 2) {
        const long m = s - 18;
        bool found = false;
        for (int k = 0; k < 3 && !found; ++k) {
            Rat g = det.G[k].eval(m);
            if (g != 0) {
                ws.push_back({s, k, g});
                found = true;
            }
        }
        if (!found)
            throw MathError("no nonzero determinant resultant at s = " + std::to_string(s));
    }
    return ws;
}

ModelResult run_model(CorrectionModel model, const std::vector<long>& fit,
                      const std::vector<long>& holdout, long s_max, int threads) {
    ModelResult mr;
    auto polys = parallel_map<InstancePolys>(
        3, threads, [&](std::size_t k) {
            return reconstruct_polynomials(static_cast<int>(k), fit, holdout, model);
        });
    for (int k = 0; k < 3; ++k) mr.polys[k] = polys[k];
    mr.det = determinant_resultants(mr.polys);
    mr.f_report = verify_f(mr.det.f, model == CorrectionModel::Reference);
    mr.witnesses = find_witnesses(mr.det, s_max);
    return mr;
}

} // namespace

Certificate build_certificate(long s_max, int threads) {
    if (s_max < 32 || s_max % 2 != 0)
        throw std::invalid_argument("build_certificate: s_max must be even and >= 32");

    Certificate cert;
    cert.version = kVersion;
    cert.s_max = s_max;
    for (int i = 0; i < 25; ++i) cert.fit_nodes.push_back(14 + 2 * i);
    for (int i = 0; i < 15; ++i) cert.holdout_nodes.push_back(64 + 2 * i);

    cert.reference = run_model(CorrectionModel::Reference, cert.fit_nodes,
                               cert.holdout_nodes, s_max, threads);
    cert.exact = run_model(CorrectionModel::Exact, cert.fit_nodes, cert.holdout_nodes,
                           s_max, threads);

    struct Task {
        int k;
        long m;
        CorrectionModel model;
    };
    std::vector<Task> tasks;
    for (CorrectionModel model : {CorrectionModel::Reference, CorrectionModel::Exact})
        for (int k = 0; k < 3; ++k)
            for (long m : cert.fit_nodes) tasks.push_back({k, m, model});
    auto recs = parallel_map<Certificate::InstanceRecord>(
        tasks.size(), threads, [&](std::size_t i) {
            const auto& t = tasks[i];
            InstanceSpec spec(t.k, t.m);
            CoeffQuad quad = instance_coefficients(spec, t.model);
            return Certificate::InstanceRecord{t.k,
                                               t.m,
                                               t.model,
                                               quad,
                                               quad.alpha - quad.gamma_p,
                                               quad.beta - quad.delta_p};
        });
    cert.instances = std::move(recs);

    const bool ref_ok = cert.reference.f_report.matches_reference &&
                        cert.reference.f_report.shift_positive &&
                        cert.reference.f_report.scan_32_38_nonzero &&
                        cert.reference.witnesses.size() == std::size_t((s_max - 32) / 2 + 1);
    const bool exact_ok = cert.exact.f_report.shift_positive &&
                          cert.exact.f_report.scan_32_38_nonzero &&
                          cert.exact.witnesses.size() == cert.reference.witnesses.size();
    cert.all_checks_pass = ref_ok && exact_ok;
    return cert;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json clin_json(const CLin& c) {
    return ordered_json{{"c0", to_string(c.a0)}, {"c1", to_string(c.a1)}};
}

ordered_json poly_json(const PolyM& p) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return coeffs;
}

ordered_json model_json(const ModelResult& mr, long s_max, bool is_reference) {
    ordered_json j;
    j["xi"] = ordered_json::array();
    j["zeta"] = ordered_json::array();
    j["p"] = ordered_json::array();
    j["q"] = ordered_json::array();
    j["G"] = ordered_json::array();
    j["factors"] = ordered_json::array();
    for (int k = 0; k < 3; ++k) {
        j["xi"].push_back(poly_json(mr.polys[k].xi));
        j["zeta"].push_back(ordered_json{{"c0", poly_json(mr.polys[k].zeta.p0)},
                                         {"c1", poly_json(mr.polys[k].zeta.p1)}});
        j["p"].push_back(poly_json(mr.det.p[k]));
        j["q"].push_back(poly_json(mr.det.q[k]));
        j["G"].push_back(poly_json(mr.det.G[k]));
        ordered_json fac;
        fac["constant"] = to_string(mr.det.constant[k]);
        ordered_json expo = ordered_json::array();
        for (const auto& [r, e] : mr.det.exponents[k])
            expo.push_back(ordered_json{{"r", r}, {"e", e}});
        fac["exponents"] = expo;
        j["factors"].push_back(fac);
    }
    j["f"] = poly_json(mr.det.f);
    ordered_json checks;
    if (is_reference)
        checks["f_match"] = mr.f_report.matches_reference;
    else
        checks["f_match"] = nullptr; // no tabulated reference for this model's f
    checks["shift_positive"] = mr.f_report.shift_positive;
    checks["scan_32_38"] = mr.f_report.scan_32_38_nonzero;
    ordered_json ws = ordered_json::array();
    for (const auto& w : mr.witnesses)
        ws.push_back(ordered_json{{"s", w.s}, {"k", w.k}, {"G", to_string(w.g_value)}});
    checks["witnesses"] = ws;
    checks["witness_count"] = mr.witnesses.size();
    checks["covers"] = "eta-bar(L_{-n} omega) = 0 for even n in [30, " +
                       std::to_string(s_max - 2) + "]; odd n by parity";
    j["checks"] = checks;
    return j;
}

} // namespace

std::string certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["version"] = cert.version;
    ordered_json assumptions;
    assumptions["k_set"] = {0, 1, 2};
    assumptions["n_p_q"] = "n = 13 - 2k, p = 3 + 2k, q = 2";
    assumptions["m"] = "even, >= 14; s = m + 18";
    assumptions["s_max"] = cert.s_max;
    assumptions["fit_nodes"] = cert.fit_nodes;
    assumptions["holdout_nodes"] = cert.holdout_nodes;
    assumptions["claim"] =
        "eta-bar(L_{-n} omega) = 0 in the C2 quotient of the 2-cycle orbifold for all "
        "n >= 30 and every central charge";
    j["assumptions"] = assumptions;

    ordered_json instances = ordered_json::array();
    for (const auto& rec : cert.instances) {
        ordered_json r;
        r["k"] = rec.k;
        r["m"] = rec.m;
        r["model"] = model_name(rec.model);
        r["alpha"] = clin_json(rec.quad.alpha);
        r["beta"] = clin_json(rec.quad.beta);
        r["gamma_prime"] = clin_json(rec.quad.gamma_p);
        r["delta_prime"] = clin_json(rec.quad.delta_p);
        r["xi"] = clin_json(rec.xi);
        r["zeta"] = clin_json(rec.zeta);
        instances.push_back(r);
    }
    j["instances"] = instances;

    ordered_json ref = model_json(cert.reference, cert.s_max, true);
    j["xi"] = ref["xi"];
    j["zeta"] = ref["zeta"];
    j["p"] = ref["p"];
    j["q"] = ref["q"];
    j["G"] = ref["G"];
    j["factors"] = ref["factors"];
    j["f"] = ref["f"];
    j["checks"] = ref["checks"];
    j["cross_check_exact_model"] = model_json(cert.exact, cert.s_max, false);
    j["all_checks_pass"] = cert.all_checks_pass;
    return j.dump(2) + "\n";
}

void write_certificate(const Certificate& cert, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << certificate_to_json(cert);
}

} // namespace vcert
