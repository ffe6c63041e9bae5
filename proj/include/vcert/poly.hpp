#ifndef VCERT_POLY_HPP
#define VCERT_POLY_HPP

#include "vcert/rat.hpp"

#include <span>
#include <utility>
#include <vector>

namespace vcert {

// Dense univariate polynomial over Rat, coefficients stored lowest degree
// first, highest stored coefficient nonzero (zero polynomial stores nothing).
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rat constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }
    static Poly from_coeffs(std::vector<Rat> coeffs) {
        Poly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }
    // r + x  (monic linear factor with root -r ... i.e. (x + r) for shift r)
    static Poly linear(Rat r) { return from_coeffs({std::move(r), Rat(1)}); }
    static Poly x() { return from_coeffs({Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial reported as -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& leading() const { return c_.back(); }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return from_coeffs(std::move(out));
    }
    friend Poly operator*(const Poly& a, const Rat& s) {
        if (s == 0) return {};
        Poly r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }
    friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }
    Rat eval(long x) const { return eval(Rat(x)); }

    // Exact quotient; throws MathError when the division leaves a remainder.
    Poly divexact(const Poly& den) const {
        if (den.is_zero())
            throw std::invalid_argument("Poly::divexact: zero divisor");
        if (is_zero()) return {};
        if (degree() < den.degree())
            throw MathError("Poly::divexact: inexact division");
        std::vector<Rat> rem = c_;
        std::vector<Rat> q(c_.size() - den.c_.size() + 1, Rat(0));
        for (std::size_t i = q.size(); i-- > 0;) {
            q[i] = rem[i + den.c_.size() - 1] / den.c_.back();
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < den.c_.size(); ++j)
                rem[i + j] -= q[i] * den.c_[j];
        }
        for (const auto& r : rem)
            if (r != 0) throw MathError("Poly::divexact: inexact division");
        return from_coeffs(std::move(q));
    }

    bool divides_exactly(const Poly& den) const {
        if (is_zero()) return true;
        if (den.is_zero() || degree() < den.degree()) return false;
        return eval_remainder_free(den);
    }

    // p(x + a)
    Poly taylor_shift(const Rat& a) const {
        Poly result;
        // Horner in (x + a)
        Poly lin = Poly::from_coeffs({a, Rat(1)});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            result = result * lin;
            result += Poly(*it);
        }
        return result;
    }

    // gcd of coefficient numerators over lcm of denominators; 0 for the zero
    // polynomial
    Rat content() const {
        if (is_zero()) return Rat(0);
        Int num_gcd(0), den_lcm(1);
        for (const auto& c : c_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        return rat(num_gcd, den_lcm);
    }

    // content removed and leading coefficient made positive
    Poly primitive_part() const {
        if (is_zero()) return {};
        Rat cont = content();
        if (leading() < 0) cont = -cont;
        Poly r = *this;
        for (auto& x : r.c_) x /= cont;
        return r;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += "(" + to_string(c_[i]) + ")";
            if (i >= 1) s += "*" + var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    bool eval_remainder_free(const Poly& den) const {
        try {
            (void)divexact(den);
            return true;
        } catch (const MathError&) {
            return false;
        }
    }

    std::vector<Rat> c_;
};

// Unique interpolant of degree < #samples through (node, value) pairs,
// computed by Newton divided differences. Nodes must be pairwise distinct.
inline Poly poly_interpolate(std::span<const std::pair<Int, Rat>> samples) {
    const std::size_t n = samples.size();
    if (n == 0) return {};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (samples[i].first == samples[j].first)
                throw std::invalid_argument("poly_interpolate: duplicate nodes");

    std::vector<Rat> coef(n);
    for (std::size_t i = 0; i < n; ++i) coef[i] = samples[i].second;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n; i-- > j;)
            coef[i] = (coef[i] - coef[i - 1]) /
                      rat(samples[i].first - samples[i - j].first, Int(1));

    Poly p(coef[n - 1]);
    for (std::size_t j = n - 1; j-- > 0;) {
        // p = p*(x - node_j) + coef_j
        p = p * Poly::from_coeffs({rat(-samples[j].first, Int(1)), Rat(1)});
        p += Poly(coef[j]);
    }
    return p;
}

inline Poly poly_interpolate(const std::vector<std::pair<Int, Rat>>& samples) {
    return poly_interpolate(std::span<const std::pair<Int, Rat>>(samples));
}

inline Poly poly_divexact(const Poly& num, const Poly& den) { return num.divexact(den); }

// Polynomial in the instance parameter m.
using PolyM = Poly;
// Polynomial in the central charge c (the oracle's scalar ring).
using CPoly = Poly;

inline CPoly mul_c(const CPoly& p) {
    if (p.is_zero()) return {};
    std::vector<Rat> out;
    out.reserve(p.coeffs().size() + 1);
    out.push_back(Rat(0));
    for (const auto& c : p.coeffs()) out.push_back(c);
    return CPoly::from_coeffs(std::move(out));
}

inline bool is_zero(const Poly& p) { return p.is_zero(); }

// p0(m) + p1(m)*c with the same c-linearity contract as CLin.
struct CLinPolyM {
    PolyM p0;
    PolyM p1;

    friend bool operator==(const CLinPolyM& a, const CLinPolyM& b) {
        return a.p0 == b.p0 && a.p1 == b.p1;
    }
};

} // namespace vcert

#endif
