#ifndef VCERT_RAT_HPP
#define VCERT_RAT_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace vcert {

using Int = mpz_class;
using Rat = mpq_class;

// Violation of a mathematical contract (inexact division, unexpected c^2
// term, residue outside the expected basis, ...). Distinct from
// std::invalid_argument, which we reserve for bad call parameters.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Generalized binomial coefficient: top may be any integer,
// binom(top, k) = top (top-1) ... (top-k+1) / k!
inline Rat binomial(const Int& top, unsigned long k) {
    Int num(1);
    for (unsigned long j = 0; j < k; ++j)
        num *= top - static_cast<long>(j);
    return rat(num, factorial(k));
}

inline Rat binomial(long top, long k) {
    if (k < 0)
        throw std::invalid_argument("binomial: k must be nonnegative");
    return binomial(Int(top), static_cast<unsigned long>(k));
}

// Canonical text form: "n" or "n/d" with d > 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }

} // namespace vcert

#endif
