#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vcert/eta.hpp"
#include "vcert/suites.hpp"

using namespace vcert;

namespace {
CState mono(std::initializer_list<int> ks) { return lstate(ks); }
EtaVec ev(EtaKey k, Rat c) { return EtaVec(std::move(k), CLin(std::move(c))); }
} // namespace

TEST_CASE("f coefficient") {
    CHECK(f_coeff(3, 3, 3) == rat(0));
    CHECK(f_coeff(3, 4, 5) == rat(4));
    // antisymmetrized: swapping two arguments keeps the reduction consistent,
    // e.g. f(4,3,5) reduces the same normal-ordered monomial (5,4,3)
    CHECK_THROWS_AS(f_coeff(2, 3, 3), std::invalid_argument);
}

TEST_CASE("g coefficient") {
    // g(3,3) = 2 d_{3,1} + d_{2,2} = 2(-2) + 8
    CHECK(g_coeff(3, 3) == rat(4));
    // consistency under swap where the rule fires (even m+n): the two
    // orderings differ by the commutator term, g(n,m) = g(m,n) + 2(m-n)
    for (int m = 3; m <= 6; ++m)
        for (int n = 3; n <= 6; ++n)
            if ((m + n) % 2 == 0)
                CHECK(g_coeff(n, m) == g_coeff(m, n) + rat(2 * (m - n)));
    CHECK_THROWS_AS(g_coeff(2, 3), std::invalid_argument);
}

TEST_CASE("eta_reduce on the spec examples") {
    CHECK(eta_reduce(mono({3, 2})).is_zero());                       // odd weight
    CHECK(eta_reduce(mono({4, 4})) == ev(EtaKey::b1(6), rat(6)));    // binom(4,2)
    CHECK(eta_reduce(mono({5})).is_zero());                          // single mode >= 3
    CHECK(eta_reduce(CState::vacuum() * rat(3)) ==
          ev(EtaKey::unit(), rat(6)));                               // 2 lambda Unit
}

TEST_CASE("eta_reduce rule domains") {
    // (b, 2) with b even -> B1(b)
    CHECK(eta_reduce(mono({6, 2})) == ev(EtaKey::b1(6), rat(1)));
    // omega itself has no rule: kept opaque
    EtaVec w = eta_reduce(mono({2}));
    CHECK(w.size() == 1);
    CHECK(w.terms().begin()->first.kind == EtaKey::Kind::Opaque);
    // (a,2,2) identification, odd a kept
    CHECK(eta_reduce(mono({5, 2, 2})) == ev(EtaKey::b2(5), rat(1)));
    CHECK(eta_reduce(mono({4, 2, 2})) == ev(EtaKey::b2(4), rat(1)));
    // all parts >= 3
    CHECK(eta_reduce(mono({4, 3, 3})) == ev(EtaKey::b1(8), -f_coeff(4, 3, 3)));
    // (m,n,2), m,n >= 3, even m+n
    EtaVec g44 = eta_reduce(mono({4, 4, 2}));
    CHECK(g44.coeff(EtaKey::b2(6)) == CLin(binomial(4, 2) / 2));
    CHECK(g44.coeff(EtaKey::b1(8)) == CLin(g_coeff(4, 4) / 2));
    // (m,n,2) with odd m+n dies entirely
    CHECK(eta_reduce(mono({4, 3, 2})).is_zero());
    // length >= 4 is out of rule range
    EtaVec l4 = eta_reduce(mono({3, 3, 2, 2}));
    CHECK(l4.size() == 1);
    CHECK(l4.terms().begin()->first.kind == EtaKey::Kind::Opaque);
}

TEST_CASE("eta_reduce is linear and weight preserving") {
    CState s = mono({6, 2}) * rat(3) + mono({4, 4}) * rat(-2) + mono({8});
    EtaVec v = eta_reduce(s);
    CHECK(v == ev(EtaKey::b1(6), rat(3)) + ev(EtaKey::b1(6), rat(-12)));
    for (const auto& [k, c] : v.terms()) CHECK(k.weight() == 8);
    // idempotent on its own basis preimages: reducing the B1/B2 preimage
    // monomials returns exactly the key
    CHECK(eta_reduce(mono({6, 2})) == ev(EtaKey::b1(6), rat(1)));
    CHECK(eta_reduce(mono({6, 2, 2})) == ev(EtaKey::b2(6), rat(1)));
}

TEST_CASE("parity vanishing, exhaustive to weight 21") {
    auto rs = suites::parity_vanishing(21);
    for (const auto& r : rs) {
        INFO(r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("shift identity to weight 16") {
    auto rs = suites::shift_identity(16);
    for (const auto& r : rs) {
        INFO(r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("word confluence to weight 16") {
    auto rs = suites::word_confluence(16);
    for (const auto& r : rs) {
        INFO(r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("poisson products") {
    EtaVec a = ev(EtaKey::b1(6), rat(2));
    EtaVec b = ev(EtaKey::b2(5), rat(3));
    EtaVec p = poisson_mul(a, b);
    CHECK(p.size() == 1);
    const auto& [key, coeff] = *p.terms().begin();
    CHECK(key.kind == EtaKey::Kind::Product);
    CHECK(key.factors.size() == 2);
    CHECK(key.weight() == 8 + 9);
    CHECK(coeff == CLin(rat(6)));

    // Unit is the algebra unit
    EtaVec u = ev(EtaKey::unit(), rat(5));
    CHECK(poisson_mul(u, b) == b * rat(5));

    // product keys flatten into multisets
    EtaVec q = poisson_mul(p, a);
    const auto& key2 = q.terms().begin()->first;
    CHECK(key2.factors.size() == 3);
}

TEST_CASE("product_expand") {
    CHECK_THROWS_AS(product_expand(2, 3, mono({2})), std::invalid_argument);
    CHECK_THROWS_AS(product_expand(3, 2, mono({2})), std::invalid_argument);

    // eta(L_{-3}L_{-3}1).eta(1): (a)_(-1)1 = a and the swap term repeats it
    EtaVec p = product_expand(3, 3, CState::vacuum());
    CHECK(p == ev(EtaKey::b1(4), rat(-4))); // 2 * (-1)^3 binom(2,1)

    // odd m+n: the product against anything must reduce to zero
    for (int n : {4, 6}) {
        EtaVec dead = product_expand(3, n, mono({2}));
        CHECK(dead.is_zero());
    }

    // matches 2 eta(L_{-m}L_{-n} u) + corrections when u = omega:
    // cross-check against the direct reduction path
    EtaVec lhs = product_expand(3, 3, mono({2}));
    EtaVec direct = eta_reduce(nth_product(mono({3, 3}), -1, mono({2}))) +
                    eta_reduce(apply_mode(-3, apply_mode(-3, mono({2}))));
    CHECK(lhs == direct);
}

TEST_CASE("confluence: reduce before vs after normalization") {
    // eta_reduce normalizes implicitly because states are always stored
    // normal ordered; reducing a re-normalized copy is identical
    for (auto ks : {std::vector<int>{6, 2}, {4, 4}, {4, 3, 3}, {5, 3, 2}}) {
        CState s(Monomial::from_sorted(ks), CLin(rat(1)));
        std::vector<int> neg;
        for (int k : ks) neg.push_back(-k);
        CState renorm = normal_order<CLin>(std::span<const int>(neg.data(), neg.size()));
        CHECK(eta_reduce(s) == eta_reduce(renorm));
    }
}
