#include "vcert/closedforms.hpp"

#include <array>
#include <initializer_list>

namespace vcert::closed_forms {

namespace {

Poly poly_from_longs(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.push_back(rat(Int(c), Int(1)));
    return Poly::from_coeffs(std::move(v));
}

Poly product_of_linears(std::initializer_list<long> roots_shifted) {
    // prod (m + r) over the given r
    Poly p(Rat(1));
    for (long r : roots_shifted) p = p * Poly::linear(rat(r));
    return p;
}

Rat binom_int(long top, long k) { return binomial(top, k); }

// inner polynomial of alpha_0, degrees 0..12
const Poly& alpha0_inner() {
    static const Poly p = poly_from_longs({-60354201600L, -25041744000L, -11025031680L,
                                           2218757736L, 4290676052L, 2061162870L,
                                           561027415L, 98527338L, 11580231L, 907530L,
                                           45565L, 1326L, 17L});
    return p;
}

// inner polynomial of gamma_0', degrees 0..13
const Poly& gamma0_inner() {
    static const Poly p = poly_from_longs({784604620800L, 322088054400L, 146756039040L,
                                           -84093309768L, -95650195420L, -30695547818L,
                                           -491574005L, 2565009941L, 883762815L,
                                           155173941L, 16374865L, 1047527L, 37505L,
                                           577L});
    return p;
}

struct ZetaData {
    long xi_constant;
    std::array<long, 3> xi_denoms;     // r with factors (m+r)
    Poly z0_head;                      // head polynomial of the c-free part
    Rat z0_scale;
    std::array<long, 3> z1_denoms;
    Poly z1_head;
    Rat z1_scale;
    bool z0_binomial_form;             // c-free part uses binom(m+14,17)/denoms
    std::vector<long> z0_linear_roots; // else: explicit product of (m+r)
    std::array<long, 4> z0_denoms4;    // binom form denominators (4 factors)
};

const ZetaData& zeta_data(int k) {
    static const ZetaData d0 = {
        2284800,
        {1, 11, 13},
        poly_from_longs({2628, 437, 30, 1}),
        rat(152320),
        {2, 3, 13},
        poly_from_longs({-366373782L, -26765899L, 41305158L, 3168931L}),
        rat(-1),
        true,
        {},
        {1, 3, 11, 13},
    };
    static const ZetaData d1 = {
        17821440,
        {3, 9, 13},
        poly_from_longs({141660, 743199, 541013, 113042, 10914, 559, 13}),
        rat(Int(8), 5 * factorial(13)),
        {2, 5, 11},
        poly_from_longs({-411762282L, -32028341L, 18046170L, 1595885L}),
        rat(-15),
        false,
        {-2, 0, 2, 4, 6, 7, 8, 10, 12, 14},
        {},
    };
    static const ZetaData d2 = {
        18670080,
        {5, 7, 13},
        poly_from_longs({5315868, 12054375, 7149347, 1390950, 129602, 6435, 143}),
        rat(Int(32), factorial(15)),
        {2, 7, 9},
        poly_from_longs({-55321438L, -4454319L, 1559062L, 152331L}),
        rat(-156),
        false,
        {-2, 0, 2, 4, 5, 6, 8, 10, 12, 14},
        {},
    };
    switch (k) {
        case 0: return d0;
        case 1: return d1;
        case 2: return d2;
    }
    throw std::invalid_argument("k must be 0, 1 or 2");
}

} // namespace

Rat alpha0(long m) {
    return rat(Int(1), factorial(14)) * rat(m - 13) * rat(m + 12) * alpha0_inner().eval(m);
}

Rat gamma0_prime(long m) {
    return rat(Int(1), factorial(14)) * rat(m + 12) * gamma0_inner().eval(m);
}

Rat beta0_c1(long m) {
    Rat r = rat(91) * rat(241 * m + 738) * rat(m - 13);
    r /= rat(2) * rat(m + 2) * rat(m + 3);
    return r * binom_int(m + 14, 16);
}

Rat xi_closed(int k, long m) {
    const auto& d = zeta_data(k);
    Rat den = rat(m + d.xi_denoms[0]) * rat(m + d.xi_denoms[1]) * rat(m + d.xi_denoms[2]);
    return rat(-d.xi_constant) * binom_int(m + 14, 17) / den;
}

CLin zeta_closed(int k, long m) {
    const auto& d = zeta_data(k);
    Rat z0;
    if (d.z0_binomial_form) {
        Rat den(1);
        for (long r : d.z0_denoms4) den *= rat(m + r);
        z0 = d.z0_scale * d.z0_head.eval(m) * binom_int(m + 14, 17) / den;
    } else {
        Rat lin(1);
        for (long r : d.z0_linear_roots) lin *= rat(m + r);
        z0 = d.z0_scale * d.z0_head.eval(m) * lin;
    }
    Rat den1 = rat(m + d.z1_denoms[0]) * rat(m + d.z1_denoms[1]) * rat(m + d.z1_denoms[2]);
    Rat z1 = d.z1_scale * d.z1_head.eval(m) * binom_int(m + 14, 16) / den1;
    return CLin(z0, z1);
}

PolyM binom_m14_17_poly() {
    Poly p = product_of_linears({-2, -1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14});
    return p * rat(Int(1), factorial(17));
}

PolyM binom_m14_16_poly() {
    Poly p = product_of_linears({-1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14});
    return p * rat(Int(1), factorial(16));
}

PolyM xi_poly(int k) {
    const auto& d = zeta_data(k);
    Poly den = product_of_linears({d.xi_denoms[0], d.xi_denoms[1], d.xi_denoms[2]});
    return (binom_m14_17_poly() * rat(-d.xi_constant)).divexact(den);
}

CLinPolyM zeta_poly(int k) {
    const auto& d = zeta_data(k);
    Poly z0;
    if (d.z0_binomial_form) {
        Poly den(Rat(1));
        for (long r : d.z0_denoms4) den = den * Poly::linear(rat(r));
        z0 = (binom_m14_17_poly() * d.z0_head * d.z0_scale).divexact(den);
    } else {
        Poly lin(Rat(1));
        for (long r : d.z0_linear_roots) lin = lin * Poly::linear(rat(r));
        z0 = d.z0_head * lin * d.z0_scale;
    }
    Poly den1 = product_of_linears({d.z1_denoms[0], d.z1_denoms[1], d.z1_denoms[2]});
    Poly z1 = (binom_m14_16_poly() * d.z1_head * d.z1_scale).divexact(den1);
    return {std::move(z0), std::move(z1)};
}

PolyM f_poly() {
    return poly_from_longs({-5823421556567940L, -13295522326219116L, -7085484924471269L,
                            -1746250016719384L, -310878749441408L, -41974581663344L,
                            -4071611633914L, -252490022696L, -6600424292L, 133103900L,
                            7930183L});
}

} // namespace vcert::closed_forms
