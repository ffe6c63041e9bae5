#ifndef VCERT_MONOMIAL_HPP
#define VCERT_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcert {

// Normal-ordered word L_{-k1} ... L_{-kr} |0> with k1 >= k2 >= ... >= kr >= 2.
// The empty word is the vacuum.
class Monomial {
  public:
    Monomial() = default;

    static const Monomial& vacuum() {
        static const Monomial v;
        return v;
    }

    static Monomial single(int k) {
        check_mode(k);
        Monomial m;
        m.modes_ = {k};
        return m;
    }

    static Monomial from_sorted(std::vector<int> modes) {
        for (std::size_t i = 0; i < modes.size(); ++i) {
            check_mode(modes[i]);
            if (i + 1 < modes.size() && modes[i] < modes[i + 1])
                throw std::invalid_argument("Monomial: modes must be nonincreasing");
        }
        Monomial m;
        m.modes_ = std::move(modes);
        return m;
    }

    bool is_vacuum() const { return modes_.empty(); }
    int length() const { return static_cast<int>(modes_.size()); }
    long weight() const { return std::accumulate(modes_.begin(), modes_.end(), 0L); }
    const std::vector<int>& modes() const { return modes_; }

    int leading() const { return modes_.front(); }
    Monomial rest() const {
        Monomial m;
        m.modes_.assign(modes_.begin() + 1, modes_.end());
        return m;
    }
    // Prepend L_{-k}; only valid when the result stays normal ordered.
    Monomial prepend(int k) const {
        check_mode(k);
        if (!modes_.empty() && k < modes_.front())
            throw std::invalid_argument("Monomial::prepend would break normal order");
        Monomial m;
        m.modes_.reserve(modes_.size() + 1);
        m.modes_.push_back(k);
        m.modes_.insert(m.modes_.end(), modes_.begin(), modes_.end());
        return m;
    }

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.weight() <=> b.weight(); c != 0) return c;
        return std::lexicographical_compare_three_way(
            a.modes_.begin(), a.modes_.end(), b.modes_.begin(), b.modes_.end());
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.modes_ == b.modes_;
    }

    std::string str() const {
        if (modes_.empty()) return "1";
        std::string s;
        for (int k : modes_) s += "L-" + std::to_string(k) + " ";
        s += "1";
        return s;
    }

  private:
    static void check_mode(int k) {
        if (k < 2) throw std::invalid_argument("Monomial: modes must be >= 2");
    }

    std::vector<int> modes_;
};

inline const Monomial& omega() {
    static const Monomial w = Monomial::single(2);
    return w;
}

// All normal-ordered monomials of the given weight (partitions into parts
// >= 2), in increasing Monomial order. n = 0 yields just the vacuum.
inline std::vector<Monomial> monomials_of_weight(long w) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    auto rec = [&](auto&& self, long rem, int maxpart) -> void {
        if (rem == 0) {
            parts.push_back(cur);
            return;
        }
        for (int first = std::min<long>(rem, maxpart); first >= 2; --first) {
            if (rem - first == 1) continue;
            cur.push_back(first);
            self(self, rem - first, first);
            cur.pop_back();
        }
    };
    if (w < 0) return {};
    rec(rec, w, static_cast<int>(w));
    std::vector<Monomial> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.push_back(Monomial::from_sorted(std::move(p)));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace vcert

#endif
