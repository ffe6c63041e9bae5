#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vcert/certificate.hpp"
#include "vcert/closedforms.hpp"

using namespace vcert;

TEST_CASE("instance spec validation") {
    CHECK_THROWS_AS(InstanceSpec(3, 14), std::invalid_argument);
    CHECK_THROWS_AS(InstanceSpec(0, 15), std::invalid_argument);
    CHECK_THROWS_AS(InstanceSpec(0, 12), std::invalid_argument);
    InstanceSpec s(1, 20);
    CHECK(s.n() == 11);
    CHECK(s.p() == 5);
    CHECK(s.q() == 2);
    CHECK(s.s() == 38);
}

TEST_CASE("reference-model coefficients match the tabulated closed forms") {
    for (long m : {14L, 16L, 20L}) {
        CoeffQuad quad = instance_coefficients(InstanceSpec(0, m), CorrectionModel::Reference);
        CHECK(quad.alpha == CLin(closed_forms::alpha0(m)));
        CHECK(quad.gamma_p == CLin(closed_forms::gamma0_prime(m)));
        CHECK(quad.beta.a1 == closed_forms::beta0_c1(m));
    }
}

TEST_CASE("xi and zeta against the closed forms") {
    // xi_0(14) = -2284800 binom(28,17) / (15*25*27)
    auto [xi0, zeta0] = xi_zeta(InstanceSpec(0, 14), CorrectionModel::Reference);
    CHECK(xi0 == CLin(rat(-2284800) * binomial(28, 17) / rat(15 * 25 * 27)));
    CHECK(zeta0 == closed_forms::zeta_closed(0, 14));

    // xi_1(16) = -17821440 binom(30,17) / ((m+3)(m+9)(m+13)) at m = 16
    auto [xi1, zeta1] = xi_zeta(InstanceSpec(1, 16), CorrectionModel::Reference);
    CHECK(xi1 == CLin(rat(-17821440) * binomial(30, 17) / rat(19 * 25 * 29)));
    CHECK(zeta1 == closed_forms::zeta_closed(1, 16));

    auto [xi2, zeta2] = xi_zeta(InstanceSpec(2, 20), CorrectionModel::Reference);
    CHECK(xi2 == CLin(closed_forms::xi_closed(2, 20)));
    CHECK(zeta2 == closed_forms::zeta_closed(2, 20));
}

TEST_CASE("structural invariants of the coefficient quad") {
    for (int k = 0; k < 3; ++k) {
        for (CorrectionModel model : {CorrectionModel::Exact, CorrectionModel::Reference}) {
            CoeffQuad quad = instance_coefficients(InstanceSpec(k, 18), model);
            CHECK(quad.alpha.c_free());
            CHECK(quad.gamma_p.c_free());
        }
    }
}

TEST_CASE("the two correction models differ exactly in the central c-parts") {
    for (int k = 0; k < 3; ++k) {
        InstanceSpec spec(k, 16);
        auto [xi_e, zeta_e] = xi_zeta(spec, CorrectionModel::Exact);
        auto [xi_r, zeta_r] = xi_zeta(spec, CorrectionModel::Reference);
        CHECK(xi_e == xi_r);
        CHECK(zeta_e.a0 == zeta_r.a0);
        CHECK(zeta_e.a1 != zeta_r.a1);
    }
}

TEST_CASE("reconstruction: degrees, holdouts, node independence") {
    std::vector<long> fit, holdout, fit_shifted;
    for (int i = 0; i < 25; ++i) fit.push_back(14 + 2 * i);
    for (int i = 0; i < 15; ++i) holdout.push_back(64 + 2 * i);
    for (int i = 0; i < 25; ++i) fit_shifted.push_back(16 + 2 * i);

    InstancePolys polys = reconstruct_polynomials(0, fit, holdout, CorrectionModel::Reference);
    CHECK(polys.xi.degree() == 14);
    CHECK(polys.zeta.p0.degree() == 16);
    CHECK(polys.zeta.p1.degree() == 16);
    CHECK(polys.xi == closed_forms::xi_poly(0));
    CHECK(polys.zeta == closed_forms::zeta_poly(0));

    // interpolation from a different node set yields the identical polynomial
    std::vector<long> holdout2;
    for (int i = 0; i < 15; ++i) holdout2.push_back(70 + 2 * i);
    InstancePolys polys2 =
        reconstruct_polynomials(0, fit_shifted, holdout2, CorrectionModel::Reference);
    CHECK(polys2.xi == polys.xi);
    CHECK(polys2.zeta == polys.zeta);

    std::vector<long> few(fit.begin(), fit.begin() + 10);
    CHECK_THROWS_AS(reconstruct_polynomials(0, few, holdout, CorrectionModel::Reference),
                    std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_polynomials(0, fit, fit, CorrectionModel::Reference),
                    std::invalid_argument);
}

TEST_CASE("determinant resultants and f recovery") {
    std::vector<long> fit, holdout;
    for (int i = 0; i < 25; ++i) fit.push_back(14 + 2 * i);
    for (int i = 0; i < 15; ++i) holdout.push_back(64 + 2 * i);
    std::array<InstancePolys, 3> polys;
    for (int k = 0; k < 3; ++k)
        polys[k] = reconstruct_polynomials(k, fit, holdout, CorrectionModel::Reference);
    DetResult det = determinant_resultants(polys);

    CHECK(det.f == closed_forms::f_poly());
    CHECK(det.f.degree() == 10);
    for (int k = 0; k < 3; ++k) {
        CHECK(det.constant[k] != 0);
        long total = det.f.degree();
        for (const auto& [r, e] : det.exponents[k]) {
            CHECK(r >= -2);
            CHECK(r <= 18);
            total += e;
        }
        CHECK(total == det.G[k].degree());
    }

    FReport rep = verify_f(det.f);
    CHECK(rep.matches_reference);
    CHECK(rep.shift_positive);
    CHECK(rep.scan_32_38_nonzero);
    CHECK(rep.scan_values.size() == 7);

    // spot values of the tabulated f
    CHECK(det.f.coeff(0) == rat(Int("-5823421556567940"), Int(1)));
    CHECK(det.f.coeff(9) == rat(133103900));
    CHECK(det.f.coeff(10) == rat(7930183));

    CHECK(rank_argument_holds(det, 14, 82, {rat(7, 3), rat(-5, 2)}));
}

TEST_CASE("minimal central charges") {
    CHECK(minimal_central_charge(2, 3) == rat(0));
    CHECK(minimal_central_charge(2, 5) == rat(-22, 5));
    CHECK(minimal_central_charge(3, 4) == rat(1, 2));
    CHECK_THROWS_AS(minimal_central_charge(1, 3), std::invalid_argument);
}

TEST_CASE("minimal certificate and determinism") {
    CHECK_THROWS_AS(build_certificate(30), std::invalid_argument);
    CHECK_THROWS_AS(build_certificate(35), std::invalid_argument);

    Certificate cert = build_certificate(32, 1);
    CHECK(cert.all_checks_pass);
    CHECK(cert.reference.witnesses.size() == 1);
    CHECK(cert.reference.witnesses[0].s == 32);
    CHECK(cert.exact.witnesses.size() == 1);
    CHECK(cert.instances.size() == 150); // 2 models x 3 k x 25 fit nodes

    std::string once = certificate_to_json(cert);
    Certificate cert2 = build_certificate(32, 2);
    CHECK(certificate_to_json(cert2) == once);
}

TEST_CASE("correction template matches the engine product exactly") {
    for (long m : {4L, 14L})
        for (long n : {3L, 9L}) {
            if (m <= n) continue;
            CState a(Monomial::from_sorted({int(m), int(n)}), CLin(rat(1)));
            CState b = normal_order<CLin>({-5, -2});
            CHECK(nth_product(a, -1, b) == correction_template(m, n, 5, 2, false));
            CHECK(!(nth_product(a, -1, b) == correction_template(m, n, 5, 2, true)));
        }
}
