#include "vcert/suites.hpp"
#include "vcert/certificate.hpp"
#include "vcert/eta.hpp"

#include <sstream>

namespace vcert::suites {

namespace {

void record(Results& rs, const std::string& name, bool pass, const std::string& detail = "") {
    rs.push_back({name, pass, detail});
}

std::vector<Monomial> basis_up_to(int max_weight) {
    std::vector<Monomial> out;
    for (long w = 0; w <= max_weight; ++w)
        for (const auto& m : monomials_of_weight(w)) out.push_back(m);
    return out;
}

} // namespace

bool all_pass(const Results& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

Results associativity_identity(int lo, int hi, int max_u_weight) {
    Results rs;
    for (int m = lo; m <= hi; ++m) {
        for (int n = lo; n <= hi; ++n) {
            for (const auto& u : basis_up_to(max_u_weight)) {
                CState a = normal_order<CLin>({-m, -n});
                CState lhs = nth_product(a, -1, CState(u, CLin(Rat(1))));
                // L_{-m} L_{-n} u + sum_i c_{m-1,n-1;i} L_{-m-n+1-i} L_{i-1} u
                CState rhs = apply_mode(-m, apply_mode(-n, CState(u, CLin(Rat(1)))));
                for (long i = 0; i - 1 <= u.weight(); ++i) {
                    CState inner = apply_mode(static_cast<int>(i - 1), u, CLin(Rat(1)));
                    if (inner.is_zero()) continue;
                    rhs += apply_mode(static_cast<int>(-m - n + 1 - i), inner) *
                           c_coeff(m - 1, n - 1, i);
                }
                if (!(lhs == rhs)) {
                    std::ostringstream os;
                    os << "m=" << m << " n=" << n << " u=" << u.str();
                    record(rs, "associativity", false, os.str());
                }
            }
        }
    }
    if (rs.empty()) record(rs, "associativity", true, "all (m,n,u) agree");
    return rs;
}

Results commutativity_identity(int max_weight) {
    Results rs;
    bool ok = true;
    std::string first_bad;
    const auto basis = basis_up_to(max_weight);
    ProductCache<CPoly> cache;
    for (const auto& a : basis) {
        if (a.is_vacuum()) continue;
        for (const auto& b : basis) {
            if (b.is_vacuum()) continue;
            for (const auto& u : basis) {
                for (int p = -3; p <= 3; ++p) {
                    for (int q = -3; q <= 3; ++q) {
                        PState ub(u, CPoly(Rat(1)));
                        PState lhs = cache.product(PState(a, CPoly(Rat(1))), p,
                                                   cache.product(PState(b, CPoly(Rat(1))), q, ub)) -
                                     cache.product(PState(b, CPoly(Rat(1))), q,
                                                   cache.product(PState(a, CPoly(Rat(1))), p, ub));
                        PState rhs;
                        for (long i = 0; i < a.weight() + b.weight(); ++i) {
                            const PState& ab = cache.product(a, static_cast<int>(i), b);
                            if (ab.is_zero()) continue;
                            rhs += cache.product(ab, p + q - static_cast<int>(i), ub) *
                                   binomial(p, i);
                        }
                        if (!(lhs == rhs)) {
                            ok = false;
                            if (first_bad.empty()) {
                                std::ostringstream os;
                                os << "a=" << a.str() << " b=" << b.str() << " u=" << u.str()
                                   << " p=" << p << " q=" << q;
                                first_bad = os.str();
                            }
                        }
                    }
                }
            }
        }
    }
    record(rs, "commutativity", ok, first_bad);
    return rs;
}

Results product_closed_form(int m_lo, int m_hi, int p_lo, int p_hi) {
    Results rs;
    for (int m = m_lo; m <= m_hi; ++m)
        for (int n = m_lo; n <= m; ++n)
            for (int p = p_lo; p <= p_hi; ++p)
                for (int q = p_lo; q <= p_hi; ++q) {
                    CState a(Monomial::from_sorted({m, n}), CLin(Rat(1)));
                    CState b = normal_order<CLin>({-p, -q});
                    CState engine = nth_product(a, -1, b);
                    CState closed = correction_template(m, n, p, q, false);
                    std::ostringstream os;
                    os << "m=" << m << " n=" << n << " p=" << p << " q=" << q;
                    record(rs, "product closed form", engine == closed, os.str());
                    if (p != q) {
                        CState tab = correction_template(m, n, p, q, true);
                        record(rs, "tabulated variant differs (p != q)", !(engine == tab),
                               os.str());
                    }
                }
    return rs;
}

Results shift_identity(int max_weight) {
    Results rs;
    bool ok = true;
    std::string first_bad;
    auto Phi = [](long m, long n) {
        Rat scale = rat(factorial(m - 1) * factorial(n - 1), Int(1));
        return normal_order<CLin>({int(-(m + 1)), int(-(n + 1))}) * scale;
    };
    for (long m = 1; m + 3 <= max_weight; ++m)
        for (long n = 1; m + n + 2 <= max_weight; ++n)
            for (long l = -m + 1; l < n; ++l) {
                EtaVec lhs = eta_reduce(Phi(m, n));
                EtaVec rhs = eta_reduce(Phi(m + l, n - l));
                if (l % 2 != 0) rhs = -rhs;
                if (!(lhs == rhs)) {
                    ok = false;
                    if (first_bad.empty())
                        first_bad = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                    " l=" + std::to_string(l);
                }
            }
    record(rs, "shift identity", ok, first_bad);
    return rs;
}

Results parity_vanishing(int max_weight) {
    Results rs;
    bool ok = true;
    std::string first_bad;
    long tested = 0;
    for (long w = 3; w <= max_weight; w += 2) {
        for (const auto& mono : monomials_of_weight(w)) {
            const auto& ks = mono.modes();
            bool in_domain = false;
            if (mono.length() == 1) in_domain = ks[0] >= 3;
            if (mono.length() == 2) in_domain = true;
            if (mono.length() == 3) in_domain = ks[2] >= 3 || ks[1] >= 3;
            if (!in_domain) continue;
            ++tested;
            if (!eta_reduce(CState(mono, CLin(Rat(1)))).is_zero()) {
                ok = false;
                if (first_bad.empty()) first_bad = mono.str();
            }
        }
    }
    record(rs, "parity vanishing", ok,
           ok ? std::to_string(tested) + " odd monomials reduce to 0" : first_bad);
    return rs;
}

Results word_confluence(int max_weight) {
    Results rs;
    bool ok = true;
    std::string first_bad;
    long tested = 0;

    auto reduce_word_direct = [](const std::vector<int>& w) -> std::pair<bool, EtaVec> {
        EtaVec v;
        if (w.size() == 2) {
            const long m = w[0], n = w[1];
            if ((m + n) % 2 != 0) return {true, v};
            Rat coef = binomial(m + n - 4, n - 2);
            if (n % 2 != 0) coef = -coef;
            if ((m + n - 2) % 2 == 0)
                v.add(EtaKey::b1(static_cast<int>(m + n - 2)), CLin(coef));
            return {true, v};
        }
        if (w.size() == 3) {
            const long m = w[0], n = w[1], l = w[2];
            if (m >= 3 && n >= 3 && l >= 3) {
                if ((m + n + l) % 2 == 0)
                    v.add(EtaKey::b1(static_cast<int>(m + n + l - 2)),
                          CLin(-f_coeff(m, n, l)));
                return {true, v};
            }
            if (m >= 3 && n >= 3 && l == 2) {
                if ((m + n) % 2 != 0) return {true, v};
                Rat coef = binomial(m + n - 4, n - 2) / 2;
                if (n % 2 != 0) coef = -coef;
                v.add(EtaKey::b2(static_cast<int>(m + n - 2)), CLin(coef));
                if ((m + n) % 2 == 0)
                    v.add(EtaKey::b1(static_cast<int>(m + n)), CLin(g_coeff(m, n) / 2));
                return {true, v};
            }
        }
        return {false, v};
    };

    auto check_word = [&](const std::vector<int>& w) {
        auto [applicable, direct] = reduce_word_direct(w);
        if (!applicable) return;
        ++tested;
        std::vector<int> neg(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
        EtaVec via_normal =
            eta_reduce(normal_order<CLin>(std::span<const int>(neg.data(), neg.size())));
        if (!(via_normal == direct)) {
            ok = false;
            if (first_bad.empty()) {
                first_bad = "word";
                for (int k : w) first_bad += " " + std::to_string(k);
            }
        }
    };

    for (int m = 2; m <= max_weight - 2; ++m)
        for (int n = 2; m + n <= max_weight; ++n) check_word({m, n});
    for (int m = 2; m <= max_weight - 4; ++m)
        for (int n = 2; m + n <= max_weight - 2; ++n)
            for (int l = 2; m + n + l <= max_weight; ++l) check_word({m, n, l});

    record(rs, "word confluence", ok,
           ok ? std::to_string(tested) + " words agree" : first_bad);
    return rs;
}

Results grading_contracts(int max_weight) {
    Results rs;
    bool ok = true;
    std::string first_bad;
    const auto basis = basis_up_to(max_weight);
    for (const auto& a : basis) {
        for (const auto& b : basis) {
            PState bs(b, CPoly(Rat(1)));
            for (int n = -4; n <= static_cast<int>(a.weight() + b.weight()) + 2; ++n) {
                PState prod = nth_product(a, n, bs);
                const long want = a.weight() + b.weight() - n - 1;
                if (n >= a.weight() + b.weight() && !prod.is_zero()) {
                    ok = false;
                    if (first_bad.empty())
                        first_bad = "skew: a=" + a.str() + " b=" + b.str() +
                                    " n=" + std::to_string(n);
                }
                if (!prod.homogeneous_of_weight(want)) {
                    ok = false;
                    if (first_bad.empty())
                        first_bad = "weight: a=" + a.str() + " b=" + b.str() +
                                    " n=" + std::to_string(n);
                }
            }
        }
        for (int n = -3; n <= 3; ++n) {
            PState moved = apply_mode(n, PState(a, CPoly(Rat(1))));
            if (!moved.homogeneous_of_weight(a.weight() - n)) {
                ok = false;
                if (first_bad.empty())
                    first_bad = "apply_mode: a=" + a.str() + " n=" + std::to_string(n);
            }
        }
    }
    record(rs, "grading", ok, first_bad);
    return rs;
}

} // namespace vcert::suites
