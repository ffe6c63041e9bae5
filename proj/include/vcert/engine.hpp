#ifndef VCERT_ENGINE_HPP
#define VCERT_ENGINE_HPP

#include "vcert/clin.hpp"
#include "vcert/poly.hpp"
#include "vcert/state.hpp"

#include <map>
#include <span>
#include <tuple>

namespace vcert {

// Virasoro commutation relations on the vacuum module:
//   [L_m, L_n] = (m-n) L_{m+n} + delta_{m+n,0} binom(m+1,3) (c/2),
//   L_n 1 = 0 for n >= -1.
// apply_mode computes L_n acting on a state, re-normal-ordering by bubbling
// the new mode into place. Each commutator either shortens the word or
// strictly reduces the number of inversions, so the recursion terminates.

template <class R>
State<R> apply_mode(int n, const Monomial& mono, const R& coeff);

template <class R>
State<R> apply_mode(int n, const State<R>& s) {
    State<R> out;
    for (const auto& [m, c] : s.terms()) out += apply_mode(n, m, c);
    return out;
}

template <class R>
State<R> apply_mode(int n, const Monomial& mono, const R& coeff) {
    State<R> out;
    if (mono.is_vacuum()) {
        if (n <= -2) out.add(Monomial::single(-n), coeff);
        return out;
    }
    const int k1 = mono.leading();
    if (n <= -k1) {
        out.add(mono.prepend(-n), coeff);
        return out;
    }
    const Monomial rest = mono.rest();
    // L_n L_{-k1} = L_{-k1} L_n + (n+k1) L_{n-k1} + delta_{n,k1} binom(n+1,3) c/2
    out += apply_mode(-k1, apply_mode(n, rest, coeff));
    if (n + k1 != 0)
        out += apply_mode(n - k1, rest, coeff * rat(n + k1));
    if (n == k1)
        out.add(rest, mul_c(coeff) * (binomial(n + 1, 3) / 2));
    return out;
}

// L_{n_1} L_{n_2} ... L_{n_s} |0>, modes applied right to left.
template <class R>
State<R> normal_order(std::span<const int> word) {
    State<R> s = State<R>::vacuum();
    for (auto it = word.rbegin(); it != word.rend(); ++it) s = apply_mode(*it, s);
    return s;
}

template <class R>
State<R> normal_order(std::initializer_list<int> word) {
    return normal_order<R>(std::span<const int>(word.begin(), word.size()));
}

template <class R>
State<R> translate(const State<R>& s) {
    return apply_mode(-1, s);
}

// n-th vertex product a_(n) b. The leftmost mode L_{-K} of a is peeled as
// omega_(-K+1) and expanded through the associativity formula; both series
// truncate by the grading (a'_(j) u = 0 once j >= wt a' + wt u, and
// omega_(i) u = 0 once i > wt u + 1). A single mode has the closed form
// (L_{-K} 1)_(n) = (-1)^K binom(n, K-2) L_{n-K+1}.
template <class R>
State<R> nth_product(const Monomial& a, int n, const State<R>& b) {
    State<R> out;
    if (b.is_zero()) return out;
    if (a.is_vacuum())
        return n == -1 ? b : out;
    const int K = a.leading();
    if (a.length() == 1) {
        Rat coef = binomial(n, K - 2);
        if (K % 2 != 0) coef = -coef;
        if (coef == 0) return out;
        return apply_mode(n - K + 1, b * coef);
    }
    const Monomial rest = a.rest();
    const long wa = rest.weight();
    const int m = -K + 1;
    for (const auto& [bm, bc] : b.terms()) {
        const long wu = bm.weight();
        const State<R> bterm(bm, bc);
        // omega_{(m-i)} (rest_{(n+i)} u)
        for (int i = 0; n + i < wa + wu; ++i) {
            Rat coef = binomial(m, i);
            if (i % 2 != 0) coef = -coef;
            State<R> inner = nth_product(rest, n + i, bterm * coef);
            if (!inner.is_zero()) out += apply_mode(m - i - 1, inner);
        }
        // -(-1)^m rest_{(m+n-i)} (omega_{(i)} u)
        for (int i = 0; i <= wu + 1; ++i) {
            Rat coef = binomial(m, i);
            if (i % 2 != 0) coef = -coef;
            if (m % 2 == 0) coef = -coef;
            State<R> inner = apply_mode(i - 1, bm, bc * coef);
            if (!inner.is_zero()) out += nth_product(rest, m + n - i, inner);
        }
    }
    return out;
}

template <class R>
State<R> nth_product(const State<R>& a, int n, const State<R>& b) {
    State<R> out;
    for (const auto& [am, ac] : a.terms()) {
        State<R> scaled;
        for (const auto& [bm, bc] : b.terms()) scaled.add(bm, ac * bc);
        out += nth_product(am, n, scaled);
    }
    return out;
}

// Memoized monomial-level products. Worth it wherever many products repeat
// (the brute-force suites); the recursion itself is routed through the
// cache. Not thread safe.
template <class R>
class ProductCache {
  public:
    const State<R>& product(const Monomial& a, int n, const Monomial& b) {
        const Key key{a, n, b};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(key, compute(a, n, b)).first->second;
    }

    State<R> product(const State<R>& a, int n, const State<R>& b) {
        State<R> out;
        for (const auto& [am, ac] : a.terms())
            for (const auto& [bm, bc] : b.terms()) {
                const State<R>& p = product(am, n, bm);
                for (const auto& [pm, pc] : p.terms()) out.add(pm, ac * bc * pc);
            }
        return out;
    }

    std::size_t size() const { return memo_.size(); }

  private:
    using Key = std::tuple<Monomial, int, Monomial>;

    State<R> compute(const Monomial& a, int n, const Monomial& b) {
        const State<R> bs(b, R(Rat(1)));
        if (a.is_vacuum()) return n == -1 ? bs : State<R>();
        const int K = a.leading();
        if (a.length() == 1) {
            Rat coef = binomial(n, K - 2);
            if (K % 2 != 0) coef = -coef;
            if (coef == 0) return {};
            return apply_mode(n - K + 1, bs * coef);
        }
        const Monomial rest = a.rest();
        const long wa = rest.weight();
        const long wu = b.weight();
        const int m = -K + 1;
        State<R> out;
        for (int i = 0; n + i < wa + wu; ++i) {
            Rat coef = binomial(m, i);
            if (i % 2 != 0) coef = -coef;
            const State<R>& inner = product(rest, n + i, b);
            if (!inner.is_zero()) out += apply_mode(m - i - 1, inner * coef);
        }
        for (int i = 0; i <= wu + 1; ++i) {
            Rat coef = binomial(m, i);
            if (i % 2 != 0) coef = -coef;
            if (m % 2 == 0) coef = -coef;
            State<R> inner = apply_mode(i - 1, b, R(Rat(1)) * coef);
            for (const auto& [im, ic] : inner.terms()) {
                const State<R>& deep = product(rest, m + n - i, im);
                for (const auto& [dm, dc] : deep.terms()) out.add(dm, ic * dc);
            }
        }
        return out;
    }

    std::map<Key, State<R>> memo_;
};

// alpha_{m,n;i} = (m+n-1)!/((m-1)!(n-1)!) binom(m+n-1+i, i) (-1)^{n-1}/(n+i)
inline Rat alpha_coeff(long m, long n, long i) {
    if (m < 1 || n < 1 || i < 0)
        throw std::invalid_argument("alpha_coeff: need m,n >= 1 and i >= 0");
    Rat r = rat(factorial(m + n - 1), factorial(m - 1) * factorial(n - 1));
    r *= binomial(m + n - 1 + i, i);
    r /= rat(n + i);
    if (n % 2 == 0) r = -r;
    return r;
}

inline Rat c_coeff(long m, long n, long i) {
    return alpha_coeff(m, n, i) + alpha_coeff(n, m, i);
}

inline Rat d_coeff(long m, long n) {
    return rat(m + n) * c_coeff(m, n, 0) - 2 * c_coeff(m, n, 1);
}

using CState = State<CLin>;
using PState = State<CPoly>;

inline CState lstate(std::initializer_list<int> sorted_modes) {
    std::vector<int> v(sorted_modes);
    return CState(Monomial::from_sorted(std::move(v)), CLin(Rat(1)));
}

} // namespace vcert

#endif
