#ifndef VCERT_SUITES_HPP
#define VCERT_SUITES_HPP

#include <string>
#include <vector>

namespace vcert::suites {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

using Results = std::vector<CheckResult>;

// (L_{-m}L_{-n}1)_(-1) u against the mode-expanded closed form, for
// m, n in [lo, hi] (both orders) and every basis monomial u of weight <= 6.
Results associativity_identity(int lo = 2, int hi = 5, int max_u_weight = 6);

// [a_(p), b_(q)] u = sum_i binom(p, i) (a_(i) b)_(p+q-i) u over CPoly
// coefficients, for basis monomials a, b, u of weight <= max_weight and
// -3 <= p, q <= 3.
Results commutativity_identity(int max_weight = 6);

// engine value of (L_{-m}L_{-n}1)_(-1) L_{-p}L_{-q}1 against the seven-term
// closed form; also reports the tabulated central-coefficient variant, which
// must disagree exactly when p != q.
Results product_closed_form(int m_lo = 3, int m_hi = 5, int p_lo = 2, int p_hi = 3);

// eta-reduction of Phi(w,w)_{m,n} against (-1)^l Phi(w,w)_{m+l,n-l}
Results shift_identity(int max_weight = 16);

// eta_reduce vanishes on odd-weight monomials of length <= 3 in rule domains
Results parity_vanishing(int max_weight = 21);

// reduction of two- and three-letter words in any mode order: applying the
// matching rule directly to the word parameters agrees with normal ordering
// first
Results word_confluence(int max_weight = 16);

// grading contracts: weights after apply_mode / nth_product, and
// nth_product(a, n, b) = 0 for n >= wt a + wt b
Results grading_contracts(int max_weight = 6);

bool all_pass(const Results& rs);

} // namespace vcert::suites

#endif
