#ifndef VCERT_ETA_HPP
#define VCERT_ETA_HPP

#include "vcert/engine.hpp"

#include <compare>
#include <map>
#include <vector>

namespace vcert {

// Canonical keys for the image of eta-bar in the C2 quotient of the 2-cycle
// orbifold:
//   Unit        class of 1 (x) 1
//   B1(b)       eta-bar(L_{-b} L_{-2} 1), b even (odd b vanishes by parity)
//   B2(a)       eta-bar(L_{-a} L_{-2} L_{-2} 1)
//   Opaque(u)   monomial outside every reduction rule, kept unreduced
//   Product     formal Poisson product of two or more non-Unit keys
struct EtaKey {
    enum class Kind { Unit, B1, B2, Opaque, Product };

    Kind kind = Kind::Unit;
    int arg = 0;                   // B1 / B2
    Monomial mono;                 // Opaque
    std::vector<EtaKey> factors;   // Product, sorted, no nested Product/Unit

    static EtaKey unit() { return {}; }
    static EtaKey b1(int b) {
        EtaKey k;
        k.kind = Kind::B1;
        k.arg = b;
        return k;
    }
    static EtaKey b2(int a) {
        EtaKey k;
        k.kind = Kind::B2;
        k.arg = a;
        return k;
    }
    static EtaKey opaque(Monomial m) {
        EtaKey k;
        k.kind = Kind::Opaque;
        k.mono = std::move(m);
        return k;
    }
    static EtaKey product(std::vector<EtaKey> fs);

    long weight() const {
        switch (kind) {
            case Kind::Unit: return 0;
            case Kind::B1: return arg + 2;
            case Kind::B2: return arg + 4;
            case Kind::Opaque: return mono.weight();
            case Kind::Product: {
                long w = 0;
                for (const auto& f : factors) w += f.weight();
                return w;
            }
        }
        return 0;
    }

    friend std::strong_ordering operator<=>(const EtaKey& a, const EtaKey& b) {
        if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0) return c;
        switch (a.kind) {
            case Kind::Unit: return std::strong_ordering::equal;
            case Kind::B1:
            case Kind::B2: return a.arg <=> b.arg;
            case Kind::Opaque: return a.mono <=> b.mono;
            case Kind::Product:
                return std::lexicographical_compare_three_way(
                    a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end());
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const EtaKey& a, const EtaKey& b) { return (a <=> b) == 0; }

    std::string str() const {
        switch (kind) {
            case Kind::Unit: return "U";
            case Kind::B1: return "B1(" + std::to_string(arg) + ")";
            case Kind::B2: return "B2(" + std::to_string(arg) + ")";
            case Kind::Opaque: return "Op[" + mono.str() + "]";
            case Kind::Product: {
                std::string s = "{";
                for (const auto& f : factors) {
                    if (s.size() > 1) s += " * ";
                    s += f.str();
                }
                return s + "}";
            }
        }
        return "?";
    }
};

inline EtaKey EtaKey::product(std::vector<EtaKey> fs) {
    std::vector<EtaKey> flat;
    for (auto& f : fs) {
        if (f.kind == Kind::Unit) continue;
        if (f.kind == Kind::Product)
            flat.insert(flat.end(), f.factors.begin(), f.factors.end());
        else
            flat.push_back(std::move(f));
    }
    std::sort(flat.begin(), flat.end());
    if (flat.empty()) return unit();
    if (flat.size() == 1) return flat.front();
    EtaKey k;
    k.kind = Kind::Product;
    k.factors = std::move(flat);
    return k;
}

// Linear combination of EtaKeys with CLin coefficients; no stored zeros.
class EtaVec {
  public:
    using Terms = std::map<EtaKey, CLin>;

    EtaVec() = default;
    EtaVec(EtaKey k, CLin c) { add(std::move(k), std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    void add(EtaKey k, const CLin& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    EtaVec& operator+=(const EtaVec& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    EtaVec& operator-=(const EtaVec& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend EtaVec operator+(EtaVec a, const EtaVec& b) { return a += b; }
    friend EtaVec operator-(EtaVec a, const EtaVec& b) { return a -= b; }
    friend EtaVec operator-(const EtaVec& a) {
        EtaVec r;
        for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend EtaVec operator*(const EtaVec& a, const Rat& s) {
        EtaVec r;
        if (s == 0) return r;
        for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, c * s);
        return r;
    }
    friend EtaVec operator*(const Rat& s, const EtaVec& a) { return a * s; }
    friend bool operator==(const EtaVec& a, const EtaVec& b) { return a.terms_ == b.terms_; }

    CLin coeff(const EtaKey& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? CLin() : it->second;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += "  +  ";
            s += "[" + c.str() + "] " + k.str();
        }
        return s;
    }

  private:
    Terms terms_;
};

// Antisymmetrized coefficient of the all-parts->=3 length-3 reduction:
// f(m,n,l) = 1/2 [ (m-n) binom(m+n+l-4, l-2) (-1)^l
//                + (m-l) binom(m+n+l-4, n-2) (-1)^{m+l}
//                + (n-l) binom(m+n+l-4, m-2) (-1)^m ]
inline Rat f_coeff(long m, long n, long l) {
    if (m < 3 || n < 3 || l < 3)
        throw std::invalid_argument("f_coeff: arguments must be >= 3");
    auto sgn = [](long e) { return e % 2 == 0 ? 1 : -1; };
    Rat t = rat(m - n) * binomial(m + n + l - 4, l - 2) * sgn(l);
    t += rat(m - l) * binomial(m + n + l - 4, n - 2) * sgn(m + l);
    t += rat(n - l) * binomial(m + n + l - 4, m - 2) * sgn(m);
    return t / 2;
}

// g(m,n) = -binom(m+n-4, n-2) (-1)^n d_{m+n-3,1} - m + n + d_{m-1,n-1}
inline Rat g_coeff(long m, long n) {
    if (m < 3 || n < 3)
        throw std::invalid_argument("g_coeff: arguments must be >= 3");
    Rat t = -binomial(m + n - 4, n - 2) * d_coeff(m + n - 3, 1);
    if (n % 2 != 0) t = -t;
    return t + rat(n - m) + d_coeff(m - 1, n - 1);
}

// Rewrites a state into the canonical eta-bar basis. Rules, longest pattern
// first, on normal-ordered monomials (k1 >= k2 >= k3):
//   length 0:              2 * Unit
//   length 1, k >= 3:      0
//   length 1, k = 2:       Opaque (no rule covers eta-bar(omega))
//   length 2 (m,n):        0 when m+n odd, else (-1)^n binom(m+n-4,n-2) B1(m+n-2)
//   length 3 (m,n,l>=3):   -f(m,n,l) B1(m+n+l-2), dropped when the weight is odd
//   length 3 (m,n>=3,2):   0 when m+n odd (both summands vanish: the B1 part
//                          by parity and the product part because its
//                          eta-bar(L_{-m-n+2} omega) factor is an odd B1);
//                          else 1/2 binom(m+n-4,n-2)(-1)^n B2(m+n-2)
//                               + 1/2 g(m,n) B1(m+n)
//   length 3 (a,2,2):      B2(a) identification (odd a kept, never assumed 0)
//   length >= 4:           Opaque
inline EtaVec eta_reduce(const CState& s) {
    EtaVec v;
    auto add_b1 = [&v](long b, const CLin& c) {
        if (b % 2 == 0) v.add(EtaKey::b1(static_cast<int>(b)), c);
    };
    for (const auto& [mono, coeff] : s.terms()) {
        const auto& ks = mono.modes();
        switch (mono.length()) {
            case 0:
                v.add(EtaKey::unit(), coeff * rat(2));
                break;
            case 1:
                if (ks[0] == 2) v.add(EtaKey::opaque(mono), coeff);
                break;
            case 2: {
                const long m = ks[0], n = ks[1];
                if ((m + n) % 2 != 0) break;
                Rat r = binomial(m + n - 4, n - 2);
                if (n % 2 != 0) r = -r;
                add_b1(m + n - 2, coeff * r);
                break;
            }
            case 3: {
                const long m = ks[0], n = ks[1], l = ks[2];
                if (l >= 3) {
                    add_b1(m + n + l - 2, coeff * -f_coeff(m, n, l));
                } else if (n >= 3) {
                    if ((m + n) % 2 != 0) break;
                    Rat r = binomial(m + n - 4, n - 2) / 2;
                    if (n % 2 != 0) r = -r;
                    v.add(EtaKey::b2(static_cast<int>(m + n - 2)), coeff * r);
                    add_b1(m + n, coeff * (g_coeff(m, n) / 2));
                } else {
                    v.add(EtaKey::b2(static_cast<int>(m)), coeff);
                }
                break;
            }
            default:
                v.add(EtaKey::opaque(mono), coeff);
                break;
        }
    }
    return v;
}

// Formal Poisson product; Unit is the algebra unit, everything else pairs
// into Product keys.
inline EtaVec poisson_mul(const EtaVec& a, const EtaVec& b) {
    EtaVec out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out.add(EtaKey::product({ka, kb}), ca * cb);
    return out;
}

// eta-bar(L_{-m} L_{-n} 1) . eta-bar(u) expanded through the engine:
//   = eta_reduce((L_{-m}L_{-n}1)_(-1) u) + eta_reduce(L_{-n} L_{-m} u).
// Needs m, n >= 3: each swap moves a mode omega_(-k+1) with k - 1 >= 2.
inline EtaVec product_expand(int m, int n, const CState& u) {
    if (m < 3 || n < 3)
        throw std::invalid_argument("product_expand: needs m, n >= 3");
    CState x = normal_order<CLin>({-m, -n});
    CState prod = nth_product(x, -1, u);
    CState swapped = apply_mode(-n, apply_mode(-m, u));
    return eta_reduce(prod) + eta_reduce(swapped);
}

} // namespace vcert

#endif
