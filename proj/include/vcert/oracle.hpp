#ifndef VCERT_ORACLE_HPP
#define VCERT_ORACLE_HPP

#include "vcert/engine.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vcert::oracle {

// Brute-force verifier for the eta-calculus: builds graded components of the
// symmetric square of the vacuum module, spans the degree-d slice of
// C2 = span{ x_(-2) y }, and decides exact membership over the rational
// function field in c by fraction-free elimination. One-directional: nothing
// computed here feeds back into the rewriting rules.

inline constexpr int kDefaultDegreeCap = 12;

// sigma-symmetric tensor vector: coefficient of u (x) v keyed by the ordered
// pair (u <= v); a valid vector has equal (u,v)/(v,u) coefficients, which the
// canonicalization enforces by construction.
class TensorVec {
  public:
    using Key = std::pair<Monomial, Monomial>;
    using Terms = std::map<Key, CPoly>;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    // adds coeff * (u (x) v) together with coeff * (v (x) u)
    void add_sym(const Monomial& u, const Monomial& v, const CPoly& coeff);
    // adds coeff * (u (x) v) only; caller must keep the total symmetric
    void add_raw(Monomial u, Monomial v, const CPoly& coeff);

    TensorVec& operator+=(const TensorVec& o);
    TensorVec& operator-=(const TensorVec& o);
    friend TensorVec operator+(TensorVec a, const TensorVec& b) { return a += b; }
    friend TensorVec operator-(TensorVec a, const TensorVec& b) { return a -= b; }
    friend TensorVec operator*(const TensorVec& a, const Rat& s);
    friend bool operator==(const TensorVec& a, const TensorVec& b) {
        return a.terms_ == b.terms_;
    }

    // total weight when homogeneous; throws otherwise
    long degree() const;

  private:
    Terms terms_;
};

// phi(a, b) = a (x) b + b (x) a, extended bilinearly
TensorVec phi(const PState& a, const PState& b);
// eta(a) = phi(a, 1)
TensorVec eta_t(const PState& a);
inline TensorVec eta_t(const Monomial& m) { return eta_t(PState(m, CPoly(Rat(1)))); }

// (sum a(x)b)_(n) (sum u(x)v) = sum_i (a_(i) u) (x) (b_(n-1-i) v)
TensorVec tensor_nth(const TensorVec& x, int n, const TensorVec& y);

// Ordered basis of the degree-d slice of the symmetric square: pairs (u, v)
// with wt u + wt v = d and u <= v, listed lexicographically.
struct TildeBasis {
    long degree;
    std::vector<TensorVec::Key> keys;
    std::map<TensorVec::Key, std::size_t> index;
};

const TildeBasis& tilde_basis(long d);

// dim of the degree-d slice (symmetrized product of partition counts)
std::size_t tilde_dim(long d);

// Coordinates of a symmetric vector in tilde_basis(d); throws when the
// vector is inhomogeneous of the wrong degree.
std::vector<CPoly> coordinates(const TensorVec& v, const TildeBasis& basis);

// Row-echelon span with fraction-free (Bareiss) elimination over Q[c].
// Rows are integer-cleared on entry; pivots and the scale chain are kept so
// later vectors reduce through the identical sequence.
class LinSystem {
  public:
    void insert(std::vector<CPoly> row);
    std::size_t rank() const { return rows_.size(); }

    struct Reduction {
        bool member = false;
        // v = sum_i (coeff_i / scale) * row_inserted_i on success
        std::vector<std::pair<std::size_t, CPoly>> combination;
        CPoly scale;
    };
    Reduction reduce(std::vector<CPoly> v, bool want_witness = false) const;

    const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }

  private:
    struct Row {
        std::vector<CPoly> entries;
        std::vector<CPoly> combo; // expression in terms of inserted rows
        CPoly divisor;            // Bareiss divisor active when the row was stored
        std::size_t pivot;
    };
    std::vector<Row> rows_;
    std::vector<std::size_t> pivot_cols_;
    std::size_t inserted_ = 0;
};

// Membership of v in the degree-d slice of C2 (optionally extended by the
// eta image at degree d) over the rational function field in c.
struct MemberReport {
    bool member = false;
    std::vector<std::pair<std::size_t, CPoly>> combination;
    CPoly scale;
};

MemberReport member_mod_c2(const TensorVec& v, long d, bool want_witness = false,
                           int degree_cap = kDefaultDegreeCap);
MemberReport member_mod_c2_plus_eta(const TensorVec& v, long d,
                                    int degree_cap = kDefaultDegreeCap);

// Same membership decided over plain rationals with c specialized.
bool member_mod_c2_at(const TensorVec& v, long d, const Rat& c_value,
                      int degree_cap = kDefaultDegreeCap, bool with_eta = false);

// drops the per-degree cached spans (used by tests to bound memory)
void clear_caches();

struct RuleReport {
    std::string rule;
    std::string params;
    bool pass = false;
    std::string note;
};

// Rule identifiers: length1, length2, length3f, length3g, swap, shift,
// parity, absorption, product_reading1, product_reading2.
// Runs every instance of the rule with total weight <= max_weight (clamped
// by degree_cap) and appends one report per instance.
std::vector<RuleReport> verify_rule(const std::string& rule, int max_weight,
                                    int degree_cap = kDefaultDegreeCap);

// Re-checks every instance of the given rules at specialized charges:
// c = 0, c = -22/5 and five pseudo-random rationals from a fixed seed.
std::vector<RuleReport> verify_rules_specialized(const std::vector<std::string>& rules,
                                                 int max_weight,
                                                 int degree_cap = kDefaultDegreeCap);

std::vector<std::string> all_rules();

} // namespace vcert::oracle

#endif
