#ifndef VCERT_CLIN_HPP
#define VCERT_CLIN_HPP

#include "vcert/rat.hpp"

namespace vcert {

// Scalar of the form a0 + a1*c, c the formal central charge. Every quantity
// in the certificate pipeline is at most linear in c; a product that would
// create a c^2 term signals a derivation bug and throws.
struct CLin {
    Rat a0;
    Rat a1;

    CLin() : a0(0), a1(0) {}
    CLin(Rat constant) : a0(std::move(constant)), a1(0) {}
    CLin(Rat c0, Rat c1) : a0(std::move(c0)), a1(std::move(c1)) {}

    static CLin c_times(const Rat& r) { return CLin(Rat(0), r); }

    bool is_zero() const { return a0 == 0 && a1 == 0; }
    bool c_free() const { return a1 == 0; }

    CLin& operator+=(const CLin& o) {
        a0 += o.a0;
        a1 += o.a1;
        return *this;
    }
    CLin& operator-=(const CLin& o) {
        a0 -= o.a0;
        a1 -= o.a1;
        return *this;
    }
    friend CLin operator+(CLin a, const CLin& b) { return a += b; }
    friend CLin operator-(CLin a, const CLin& b) { return a -= b; }
    friend CLin operator-(const CLin& a) { return CLin(-a.a0, -a.a1); }

    friend CLin operator*(const CLin& a, const Rat& s) { return CLin(a.a0 * s, a.a1 * s); }
    friend CLin operator*(const Rat& s, const CLin& a) { return a * s; }

    friend CLin operator*(const CLin& a, const CLin& b) {
        if (a.a1 != 0 && b.a1 != 0)
            throw MathError("CLin: product has a c^2 term");
        return CLin(a.a0 * b.a0, a.a0 * b.a1 + a.a1 * b.a0);
    }

    friend bool operator==(const CLin& a, const CLin& b) {
        return a.a0 == b.a0 && a.a1 == b.a1;
    }

    // Specialization helper for the reporting layer only; the engine never
    // fixes c.
    Rat at_c(const Rat& c) const { return a0 + a1 * c; }

    std::string str() const {
        if (a1 == 0) return to_string(a0);
        std::string s = to_string(a0);
        s += " + (";
        s += to_string(a1);
        s += ")c";
        return s;
    }
};

inline CLin mul_c(const CLin& x) {
    if (x.a1 != 0)
        throw MathError("CLin: multiplication by c produces a c^2 term");
    return CLin(Rat(0), x.a0);
}

inline bool is_zero(const CLin& x) { return x.is_zero(); }

} // namespace vcert

#endif
