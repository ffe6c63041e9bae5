#ifndef VCERT_STATE_HPP
#define VCERT_STATE_HPP

#include "vcert/monomial.hpp"
#include "vcert/rat.hpp"

#include <map>

namespace vcert {

// Finite linear combination of normal-ordered monomials over a coefficient
// ring R (CLin in the certificate pipeline, CPoly in the oracle). Zero
// coefficients are never stored.
template <class R>
class State {
  public:
    using Terms = std::map<Monomial, R>;

    State() = default;
    State(Monomial m, R coeff) { add(std::move(m), std::move(coeff)); }

    static State vacuum(R coeff = R(Rat(1))) { return State(Monomial::vacuum(), std::move(coeff)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    void add(Monomial m, R coeff) {
        if (is_zero_coeff(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
        if (!inserted) {
            it->second += coeff;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

    State& operator+=(const State& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    State& operator-=(const State& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    friend State operator+(State a, const State& b) { return a += b; }
    friend State operator-(State a, const State& b) { return a -= b; }
    friend State operator-(const State& a) {
        State r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend State operator*(const State& a, const Rat& s) {
        State r;
        if (s == 0) return r;
        for (const auto& [m, c] : a.terms_) {
            R v = c * s;
            if (!is_zero_coeff(v)) r.terms_.emplace(m, std::move(v));
        }
        return r;
    }
    friend State operator*(const Rat& s, const State& a) { return a * s; }

    friend bool operator==(const State& a, const State& b) { return a.terms_ == b.terms_; }

    R coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? R() : it->second;
    }

    // true when every stored term has the given weight
    bool homogeneous_of_weight(long w) const {
        for (const auto& [m, c] : terms_)
            if (m.weight() != w) return false;
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += "  +  ";
            s += "[" + coeff_str(c) + "] " + m.str();
        }
        return s;
    }

  private:
    static bool is_zero_coeff(const R& c) {
        using vcert::is_zero;
        return is_zero(c);
    }
    template <class T>
    static auto coeff_str(const T& c) -> decltype(c.str()) {
        return c.str();
    }

    Terms terms_;
};

} // namespace vcert

#endif
