#include "vcert/oracle.hpp"
#include "vcert/certificate.hpp"
#include "vcert/eta.hpp"

#include <random>
#include <sstream>
#include <tuple>

namespace vcert::oracle {

namespace {

Int poly_denominator_lcm(const CPoly& p) {
    Int l(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    return l;
}

std::string params_str(std::initializer_list<long> vals) {
    std::string s;
    for (long v : vals) {
        if (!s.empty()) s += ",";
        s += std::to_string(v);
    }
    return s;
}

} // namespace

void TensorVec::add_raw(Monomial u, Monomial v, const CPoly& coeff) {
    if (coeff.is_zero()) return;
    Key key{std::move(u), std::move(v)};
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TensorVec::add_sym(const Monomial& u, const Monomial& v, const CPoly& coeff) {
    add_raw(u, v, coeff);
    add_raw(v, u, coeff);
}

TensorVec& TensorVec::operator+=(const TensorVec& o) {
    for (const auto& [k, c] : o.terms_) add_raw(k.first, k.second, c);
    return *this;
}

TensorVec& TensorVec::operator-=(const TensorVec& o) {
    for (const auto& [k, c] : o.terms_) add_raw(k.first, k.second, -c);
    return *this;
}

TensorVec operator*(const TensorVec& a, const Rat& s) {
    TensorVec r;
    if (s == 0) return r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, c * s);
    return r;
}

long TensorVec::degree() const {
    long d = -1;
    for (const auto& [k, c] : terms_) {
        long w = k.first.weight() + k.second.weight();
        if (d == -1) d = w;
        if (d != w) throw MathError("TensorVec::degree: inhomogeneous vector");
    }
    return d;
}

TensorVec phi(const PState& a, const PState& b) {
    TensorVec out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_sym(ma, mb, ca * cb);
    return out;
}

TensorVec eta_t(const PState& a) { return phi(a, PState::vacuum(CPoly(Rat(1)))); }

namespace {

// memoized monomial-level products; the oracle is single-threaded
const PState& cached_nth(const Monomial& a, int n, const Monomial& b) {
    static ProductCache<CPoly> cache;
    return cache.product(a, n, b);
}

} // namespace

TensorVec tensor_nth(const TensorVec& x, int n, const TensorVec& y) {
    TensorVec out;
    for (const auto& [kx, cx] : x.terms()) {
        const Monomial& a = kx.first;
        const Monomial& b = kx.second;
        for (const auto& [ky, cy] : y.terms()) {
            const Monomial& u = ky.first;
            const Monomial& v = ky.second;
            const CPoly c = cx * cy;
            const long lo = n - b.weight() - v.weight();
            const long hi = a.weight() + u.weight() - 1;
            for (long i = lo; i <= hi; ++i) {
                const PState& au = cached_nth(a, static_cast<int>(i), u);
                if (au.is_zero()) continue;
                const PState& bv = cached_nth(b, static_cast<int>(n - 1 - i), v);
                if (bv.is_zero()) continue;
                for (const auto& [mu, cu] : au.terms())
                    for (const auto& [mv, cv] : bv.terms())
                        out.add_raw(mu, mv, c * cu * cv);
            }
        }
    }
    return out;
}

const TildeBasis& tilde_basis(long d) {
    static std::map<long, TildeBasis> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    TildeBasis basis;
    basis.degree = d;
    for (long wa = 0; 2 * wa <= d; ++wa) {
        for (const auto& u : monomials_of_weight(wa)) {
            for (const auto& v : monomials_of_weight(d - wa)) {
                if (2 * wa == d && v < u) continue;
                basis.keys.emplace_back(u, v);
            }
        }
    }
    std::sort(basis.keys.begin(), basis.keys.end());
    for (std::size_t i = 0; i < basis.keys.size(); ++i)
        basis.index.emplace(basis.keys[i], i);
    return cache.emplace(d, std::move(basis)).first->second;
}

std::size_t tilde_dim(long d) { return tilde_basis(d).keys.size(); }

std::vector<CPoly> coordinates(const TensorVec& v, const TildeBasis& basis) {
    std::vector<CPoly> coords(basis.keys.size());
    for (const auto& [k, c] : v.terms()) {
        if (k.first.weight() + k.second.weight() != basis.degree)
            throw MathError("coordinates: vector not homogeneous of the basis degree");
        TensorVec::Key sorted = k.first <= k.second ? k : TensorVec::Key{k.second, k.first};
        auto it = basis.index.find(sorted);
        if (it == basis.index.end())
            throw MathError("coordinates: key outside the basis");
        if (!(sorted == k)) {
            // symmetric partner must carry the same coefficient
            auto other = v.terms().find(sorted);
            if (other == v.terms().end() || !(other->second == c))
                throw MathError("coordinates: vector is not sigma-symmetric");
            continue;
        }
        coords[it->second] = c;
    }
    return coords;
}

namespace {

// multiply a row by the lcm of every coefficient denominator
void integer_clear(std::vector<CPoly>& row) {
    Int clear(1);
    for (const auto& e : row)
        mpz_lcm(clear.get_mpz_t(), clear.get_mpz_t(),
                poly_denominator_lcm(e).get_mpz_t());
    if (clear != 1) {
        Rat f = rat(clear, Int(1));
        for (auto& e : row) e = e * f;
    }
}

} // namespace

void LinSystem::insert(std::vector<CPoly> row) {
    integer_clear(row);
    const std::size_t self = inserted_++;

    std::vector<CPoly> combo(self + 1);
    combo[self] = CPoly(Rat(1));
    CPoly scale(Rat(1));

    CPoly divisor(Rat(1));
    for (const auto& r : rows_) {
        const CPoly& piv = r.entries[r.pivot];
        const CPoly vp = row[r.pivot];
        for (std::size_t c = 0; c < row.size(); ++c)
            row[c] = (piv * row[c] - vp * r.entries[c]).divexact(divisor);
        scale = (piv * scale).divexact(divisor);
        for (std::size_t j = 0; j < combo.size(); ++j) {
            CPoly rc = j < r.combo.size() ? r.combo[j] : CPoly();
            combo[j] = (piv * combo[j] + vp * rc).divexact(divisor);
        }
        divisor = piv;
    }

    std::size_t pivot = row.size();
    for (std::size_t c = 0; c < row.size(); ++c)
        if (!row[c].is_zero()) {
            pivot = c;
            break;
        }
    if (pivot == row.size()) return; // dependent row

    Row stored;
    stored.entries = std::move(row);
    stored.pivot = pivot;
    stored.divisor = divisor;
    // entries = scale * g_self - sum_j combo_j g_j  (j < self)
    stored.combo.assign(inserted_, CPoly());
    for (std::size_t j = 0; j < combo.size(); ++j) stored.combo[j] = -combo[j];
    stored.combo[self] = scale;
    pivot_cols_.push_back(pivot);
    rows_.push_back(std::move(stored));
}

LinSystem::Reduction LinSystem::reduce(std::vector<CPoly> v, bool want_witness) const {
    Reduction red;
    Int clear(1);
    for (const auto& e : v)
        mpz_lcm(clear.get_mpz_t(), clear.get_mpz_t(),
                poly_denominator_lcm(e).get_mpz_t());
    Rat clear_f = rat(clear, Int(1));
    if (clear != 1)
        for (auto& e : v) e = e * clear_f;
    const std::vector<CPoly> v_cleared = v;

    std::vector<CPoly> combo(inserted_);
    CPoly scale(Rat(1));
    CPoly divisor(Rat(1));
    for (const auto& r : rows_) {
        const CPoly& piv = r.entries[r.pivot];
        const CPoly vp = v[r.pivot];
        if (!want_witness && vp.is_zero()) continue;
        for (std::size_t c = 0; c < v.size(); ++c)
            v[c] = (piv * v[c] - vp * r.entries[c]).divexact(divisor);
        if (want_witness) {
            scale = (piv * scale).divexact(divisor);
            for (std::size_t j = 0; j < combo.size(); ++j) {
                CPoly rc = j < r.combo.size() ? r.combo[j] : CPoly();
                combo[j] = (piv * combo[j] + vp * rc).divexact(divisor);
            }
            divisor = piv;
        }
        if (!want_witness) divisor = piv;
    }
    red.member = true;
    for (const auto& e : v)
        if (!e.is_zero()) {
            red.member = false;
            break;
        }
    if (red.member && want_witness) {
        // cleared_v * scale = sum combo_j g_j, so v = sum (combo_j / (scale*clear)) g_j
        red.scale = scale * clear_f;
        for (std::size_t j = 0; j < combo.size(); ++j)
            if (!combo[j].is_zero()) red.combination.emplace_back(j, combo[j]);
    }
    return red;
}

namespace {

struct SpanKey {
    long degree;
    bool with_eta;
    bool specialized;
    Rat charge;

    bool operator<(const SpanKey& o) const {
        return std::tie(degree, with_eta, specialized, charge) <
               std::tie(o.degree, o.with_eta, o.specialized, o.charge);
    }
};

CPoly specialize(const CPoly& p, const Rat& c) { return CPoly(p.eval(c)); }

std::map<SpanKey, LinSystem>& span_cache() {
    static std::map<SpanKey, LinSystem> cache;
    return cache;
}

std::vector<std::vector<CPoly>> c2_generator_rows(long d) {
    const TildeBasis& basis = tilde_basis(d);
    std::vector<std::vector<CPoly>> rows;
    for (long wa = 0; wa <= d - 1; ++wa) {
        const TildeBasis& ba = tilde_basis(wa);
        const TildeBasis& bb = tilde_basis(d - 1 - wa);
        for (const auto& ka : ba.keys) {
            TensorVec x;
            if (ka.first == ka.second)
                x.add_raw(ka.first, ka.second, CPoly(Rat(1)));
            else
                x.add_sym(ka.first, ka.second, CPoly(Rat(1)));
            for (const auto& kb : bb.keys) {
                TensorVec y;
                if (kb.first == kb.second)
                    y.add_raw(kb.first, kb.second, CPoly(Rat(1)));
                else
                    y.add_sym(kb.first, kb.second, CPoly(Rat(1)));
                TensorVec g = tensor_nth(x, -2, y);
                if (g.is_zero()) continue;
                rows.push_back(coordinates(g, basis));
            }
        }
    }
    return rows;
}

std::vector<std::vector<CPoly>> eta_rows(long d) {
    const TildeBasis& basis = tilde_basis(d);
    std::vector<std::vector<CPoly>> rows;
    for (const auto& mono : monomials_of_weight(d))
        rows.push_back(coordinates(eta_t(mono), basis));
    return rows;
}

const LinSystem& span_for(long d, bool with_eta, bool specialized, const Rat& charge) {
    SpanKey key{d, with_eta, specialized, specialized ? charge : Rat(0)};
    auto& cache = span_cache();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    LinSystem sys;
    auto add_rows = [&](std::vector<std::vector<CPoly>> rows) {
        for (auto& row : rows) {
            if (specialized)
                for (auto& e : row) e = specialize(e, charge);
            sys.insert(std::move(row));
        }
    };
    add_rows(c2_generator_rows(d));
    if (with_eta) add_rows(eta_rows(d));
    return cache.emplace(std::move(key), std::move(sys)).first->second;
}

void check_cap(long d, int degree_cap) {
    if (d > degree_cap)
        throw std::invalid_argument("degree " + std::to_string(d) +
                                    " exceeds the configured cap " +
                                    std::to_string(degree_cap));
}

} // namespace

MemberReport member_mod_c2(const TensorVec& v, long d, bool want_witness, int degree_cap) {
    check_cap(d, degree_cap);
    MemberReport rep;
    if (v.is_zero()) {
        rep.member = true;
        return rep;
    }
    const LinSystem& sys = span_for(d, false, false, Rat(0));
    auto coords = coordinates(v, tilde_basis(d));
    auto red = sys.reduce(coords, want_witness);
    rep.member = red.member;
    rep.combination = std::move(red.combination);
    rep.scale = std::move(red.scale);
    if (rep.member && want_witness) {
        // recheck the combination against the generator rows themselves:
        // scale * cleared(v) must equal sum combo_j * cleared(g_j)
        auto rows = c2_generator_rows(d);
        std::vector<std::vector<CPoly>> nonzero;
        for (auto& r : rows) {
            bool z = true;
            for (const auto& e : r) z = z && e.is_zero();
            if (!z) {
                integer_clear(r);
                nonzero.push_back(std::move(r));
            }
        }
        for (std::size_t col = 0; col < coords.size(); ++col) {
            CPoly lhs = rep.scale * coords[col];
            CPoly rhs;
            for (const auto& [j, cf] : rep.combination) rhs += cf * nonzero.at(j)[col];
            if (!(lhs == rhs)) throw MathError("member_mod_c2: witness failed recheck");
        }
    }
    return rep;
}

MemberReport member_mod_c2_plus_eta(const TensorVec& v, long d, int degree_cap) {
    check_cap(d, degree_cap);
    MemberReport rep;
    if (v.is_zero()) {
        rep.member = true;
        return rep;
    }
    const LinSystem& sys = span_for(d, true, false, Rat(0));
    rep.member = sys.reduce(coordinates(v, tilde_basis(d)), false).member;
    return rep;
}

bool member_mod_c2_at(const TensorVec& v, long d, const Rat& c_value, int degree_cap,
                      bool with_eta) {
    check_cap(d, degree_cap);
    if (v.is_zero()) return true;
    const LinSystem& sys = span_for(d, with_eta, true, c_value);
    auto coords = coordinates(v, tilde_basis(d));
    for (auto& e : coords) e = specialize(e, c_value);
    return sys.reduce(std::move(coords), false).member;
}

void clear_caches() { span_cache().clear(); }

namespace {

PState pmono(const Monomial& m) { return PState(m, CPoly(Rat(1))); }
PState pmono(std::initializer_list<int> sorted) {
    return pmono(Monomial::from_sorted(std::vector<int>(sorted)));
}

using CheckFn = std::function<bool(const TensorVec&, long)>;

struct InstanceSink {
    std::vector<RuleReport>& out;
    std::string rule;
    int degree_cap;
    const Rat* charge = nullptr; // when set, verify at this c instead of over Q[c]

    void check(const std::string& params, const TensorVec& diff,
               const std::string& note = "") {
        RuleReport rep{rule, params, false, note};
        if (diff.is_zero()) {
            rep.pass = true;
        } else {
            long d = diff.degree();
            rep.pass = charge ? member_mod_c2_at(diff, d, *charge, degree_cap)
                              : member_mod_c2(diff, d, false, degree_cap).member;
        }
        out.push_back(std::move(rep));
    }
    void check_plus_eta(const std::string& params, const TensorVec& diff) {
        RuleReport rep{rule, params, false, ""};
        if (diff.is_zero()) {
            rep.pass = true;
        } else if (charge) {
            rep.pass = member_mod_c2_at(diff, diff.degree(), *charge, degree_cap, true);
        } else {
            rep.pass = member_mod_c2_plus_eta(diff, diff.degree(), degree_cap).member;
        }
        out.push_back(std::move(rep));
    }
};

void run_length1(InstanceSink& sink, int max_weight) {
    for (long m = 3; m <= max_weight; ++m)
        sink.check(params_str({m}), eta_t(Monomial::single(static_cast<int>(m))));
}

void run_length2(InstanceSink& sink, int max_weight) {
    for (long m = 2; m + 2 <= max_weight; ++m)
        for (long n = 2; n <= m && m + n <= max_weight; ++n) {
            TensorVec diff = eta_t(pmono({int(m), int(n)}));
            if ((m + n) % 2 == 0) {
                Rat coef = binomial(m + n - 4, n - 2);
                if (n % 2 != 0) coef = -coef;
                diff -= eta_t(pmono({int(m + n - 2), 2})) * coef;
            }
            sink.check(params_str({m, n}), diff);
        }
}

void run_length3f(InstanceSink& sink, int max_weight) {
    for (long m = 3; m <= max_weight; ++m)
        for (long n = 3; n <= m; ++n)
            for (long l = 3; l <= n; ++l) {
                if (m + n + l > max_weight) continue;
                TensorVec diff = eta_t(pmono({int(m), int(n), int(l)}));
                diff += eta_t(pmono({int(m + n + l - 2), 2})) * f_coeff(m, n, l);
                sink.check(params_str({m, n, l}), diff);
            }
}

void run_length3g(InstanceSink& sink, int max_weight) {
    for (long m = 3; m + 5 <= max_weight; ++m)
        for (long n = 3; n <= m && m + n + 2 <= max_weight; ++n) {
            TensorVec diff = eta_t(pmono({int(m), int(n), 2})) * Rat(2);
            Rat coef = binomial(m + n - 4, n - 2);
            if (n % 2 != 0) coef = -coef;
            diff -= eta_t(pmono({int(m + n - 2), 2, 2})) * coef;
            diff -= eta_t(pmono({int(m + n), 2})) * g_coeff(m, n);
            sink.check(params_str({m, n}), diff);
        }
}

void run_swap(InstanceSink& sink, int max_weight) {
    for (long wa = 2; wa <= 3; ++wa)
        for (const auto& a : monomials_of_weight(wa))
            for (long wu = 0; wu <= 4; ++wu)
                for (const auto& u : monomials_of_weight(wu))
                    for (long wb = 2; wb <= 4; ++wb)
                        for (const auto& b : monomials_of_weight(wb))
                            for (long n = 2; n <= 4; ++n) {
                                const long d = wa + wu + wb + n - 1;
                                if (d > max_weight) continue;
                                PState au = nth_product(a, int(-n), pmono(u));
                                PState ab = nth_product(a, int(-n), pmono(b));
                                TensorVec diff = phi(au, pmono(b));
                                diff += phi(pmono(u), ab);
                                sink.check(params_str({n, wa, wu, wb}), diff);
                            }
}

void run_shift(InstanceSink& sink, int max_weight) {
    auto Phi = [](long m, long n) {
        Rat scale = rat(factorial(m - 1) * factorial(n - 1), Int(1));
        PState w = normal_order<CPoly>({int(-(m + 1)), int(-(n + 1))});
        return w * scale;
    };
    for (long m = 1; m + 3 <= max_weight; ++m)
        for (long n = 1; m + n + 2 <= max_weight; ++n)
            for (long l = -m + 1; l < n; ++l) {
                if (l == 0) continue;
                TensorVec diff = eta_t(Phi(m, n));
                TensorVec rhs = eta_t(Phi(m + l, n - l));
                if (l % 2 == 0)
                    diff -= rhs;
                else
                    diff += rhs;
                sink.check(params_str({m, n, l}), diff);
            }
}

void run_parity(InstanceSink& sink, int max_weight) {
    for (long w = 3; w <= max_weight; w += 2) {
        for (const auto& mono : monomials_of_weight(w)) {
            const auto& ks = mono.modes();
            bool in_domain = false;
            if (mono.length() == 1) in_domain = ks[0] >= 3;
            if (mono.length() == 2) in_domain = true;
            if (mono.length() == 3) in_domain = ks[2] >= 3 || ks[1] >= 3;
            if (!in_domain) continue;
            sink.check("w=" + std::to_string(w) + " " + mono.str(), eta_t(mono));
        }
    }
}

void run_absorption(InstanceSink& sink, int max_weight) {
    for (long wa = 0; wa <= 4; ++wa)
        for (const auto& a : monomials_of_weight(wa))
            for (long wb = 2; wb <= 3; ++wb)
                for (const auto& b : monomials_of_weight(wb))
                    for (long wu = 0; wu <= 4; ++wu)
                        for (const auto& u : monomials_of_weight(wu))
                            for (long n = 3; n <= 4; ++n) {
                                const long d = wa + wb + wu + n - 1;
                                if (d > max_weight || d == 0) continue;
                                PState bu = nth_product(b, int(-n), pmono(u));
                                if (bu.is_zero()) continue;
                                TensorVec v = phi(pmono(a), bu);
                                sink.check_plus_eta(params_str({n, wa, wb, wu}), v);
                            }
}

void run_product(InstanceSink& sink, int max_weight, int reading) {
    const Monomial& w = omega();
    for (long m = 2; m <= 5; ++m)
        for (long n = 2; n <= 5; ++n)
            for (long wu = 0; wu <= 4; wu += 2)
                for (const auto& u : monomials_of_weight(wu)) {
                    const long d = (m + 1) + (n + 1) + wu;
                    if (d > max_weight) continue;
                    PState x = nth_product(w, int(-m), nth_product(w, int(-n), PState::vacuum(CPoly(Rat(1)))));
                    TensorVec lhs = tensor_nth(eta_t(x), -1, eta_t(u));

                    TensorVec rhs = eta_t(nth_product(w, int(-m), nth_product(w, int(-n), pmono(u)))) * Rat(2);
                    for (long i = 0; i <= 3; ++i) {
                        PState wiw = nth_product(w, int(i), pmono(w));
                        if (wiw.is_zero()) continue;
                        rhs += eta_t(nth_product(wiw, int(-m - n - i), pmono(u))) *
                               binomial(-n, i);
                    }
                    for (long i = 0; i <= wu + 1; ++i) {
                        PState wiu = nth_product(w, int(i), pmono(u));
                        if (wiu.is_zero()) continue;
                        Rat ca = alpha_coeff(m, n, i);
                        Rat cb = reading == 1 ? alpha_coeff(m, n, i) : alpha_coeff(n, m, i);
                        rhs += eta_t(nth_product(w, int(-m - n - i), wiu)) * (ca + cb);
                    }
                    TensorVec diff = lhs;
                    diff -= rhs;
                    sink.check(params_str({m, n, wu}), diff,
                               reading == 1 ? "second sum uses alpha_{m,n;i}"
                                            : "second sum uses alpha_{n,m;i}");
                }
}

void dispatch(const std::string& rule, InstanceSink& sink, int max_weight) {
    if (rule == "length1") run_length1(sink, max_weight);
    else if (rule == "length2") run_length2(sink, max_weight);
    else if (rule == "length3f") run_length3f(sink, max_weight);
    else if (rule == "length3g") run_length3g(sink, max_weight);
    else if (rule == "swap") run_swap(sink, max_weight);
    else if (rule == "shift") run_shift(sink, max_weight);
    else if (rule == "parity") run_parity(sink, max_weight);
    else if (rule == "absorption") run_absorption(sink, max_weight);
    else if (rule == "product_reading1") run_product(sink, max_weight, 1);
    else if (rule == "product_reading2") run_product(sink, max_weight, 2);
    else throw std::invalid_argument("unknown rule: " + rule);
}

} // namespace

std::vector<std::string> all_rules() {
    return {"length1", "length2",  "length3f",   "length3g",
            "swap",    "shift",    "parity",     "absorption",
            "product_reading1",    "product_reading2"};
}

std::vector<RuleReport> verify_rule(const std::string& rule, int max_weight,
                                    int degree_cap) {
    if (max_weight > degree_cap)
        throw std::invalid_argument("max weight " + std::to_string(max_weight) +
                                    " exceeds the configured cap " +
                                    std::to_string(degree_cap));
    std::vector<RuleReport> out;
    InstanceSink sink{out, rule, degree_cap, nullptr};
    dispatch(rule, sink, max_weight);
    return out;
}

std::vector<RuleReport> verify_rules_specialized(const std::vector<std::string>& rules,
                                                 int max_weight, int degree_cap) {
    if (max_weight > degree_cap)
        throw std::invalid_argument("max weight exceeds the configured cap");
    std::vector<Rat> charges = {Rat(0), minimal_central_charge(2, 5)};
    std::mt19937 rng(20260331u);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    while (charges.size() < 7) {
        Rat c = rat(num(rng), den(rng));
        bool dup = false;
        for (const auto& prev : charges) dup = dup || prev == c;
        if (!dup) charges.push_back(c);
    }
    std::vector<RuleReport> out;
    for (const auto& c : charges) {
        for (const auto& rule : rules) {
            std::vector<RuleReport> reports;
            InstanceSink sink{reports, rule, degree_cap, &c};
            dispatch(rule, sink, max_weight);
            for (auto& rep : reports) {
                rep.note = "c = " + to_string(c) +
                           (rep.note.empty() ? "" : "; " + rep.note);
                out.push_back(std::move(rep));
            }
        }
    }
    return out;
}

} // namespace vcert::oracle
