#pragma once

#include "mtv/indices.hpp"
#include "mtv/powerseries.hpp"
#include "mtv/tvalues.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mtv {

// Words over {X, Y}; z_k = X^(k-1) Y. Words in A^1 are empty or end in Y,
// admissible words (A^0) are additionally empty or start with X.
using Word = std::string;

// Length-lexicographic order with X < Y.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

Word z(int k);
Word word_from_index(const Index& k);
// Throws DomainError unless w is in A^1.
Index word_to_index(const Word& w);
bool in_A1(const Word& w);
bool is_admissible_word(const Word& w);
// "z2 z3", "1" for the empty word.
std::string word_to_string(const Word& w);

// Polynomial in the two formal constants V (regularization value t(1)) and
// L (log 2), with rational coefficients.
class Coef {
public:
    using Mono = std::pair<int, int>;  // (deg V, deg L)

    Coef() = default;
    Coef(const Rational& q);  // NOLINT: implicit by design
    static Coef V();
    static Coef L();

    bool is_zero() const { return t_.empty(); }
    bool is_rational() const;
    Rational rational() const;  // constant part
    const std::map<Mono, Rational>& terms() const { return t_; }
    int v_degree() const;

    Coef& operator+=(const Coef& o);
    Coef& operator-=(const Coef& o);
    Coef& operator*=(const Rational& q);
    friend Coef operator*(const Coef& a, const Coef& b);
    friend Coef operator+(Coef a, const Coef& b) { return a += b; }
    friend Coef operator-(Coef a, const Coef& b) { return a -= b; }
    bool operator==(const Coef& o) const { return t_ == o.t_; }

    TrackedReal eval(const Rational& V, const TrackedReal& log2) const;
    std::string to_string() const;

private:
    std::map<Mono, Rational> t_;
};

enum class ProductMode { stuffle, star_stuffle };

// Finite formal sums of words with Coef coefficients. Multiplication is the
// stuffle product.
class LinComb {
public:
    using Map = std::map<Word, Coef, WordLess>;

    LinComb() = default;
    LinComb(const Rational& q);  // NOLINT: constant multiple of the empty word
    static LinComb word(const Word& w, const Coef& c = Coef(Rational(1)));

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Coef coeff(const Word& w) const;
    void add(const Word& w, const Coef& c);

    LinComb& operator+=(const LinComb& o);
    LinComb& operator-=(const LinComb& o);
    LinComb& operator*=(const Rational& q);
    LinComb& operator*=(const Coef& c);
    LinComb operator-() const;
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const LinComb& a, const LinComb& b);
    friend LinComb operator*(LinComb a, const Rational& q) { return a *= q; }
    bool operator==(const LinComb& o) const { return t_ == o.t_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Map t_;
};

inline bool coeff_is_zero(const LinComb& x) { return x.is_zero(); }

// Word-level product with integer multiplicities. Memoized per thread.
const std::map<Word, long, WordLess>& word_product(const Word& a, const Word& b, ProductMode mode);
LinComb product(const LinComb& a, const LinComb& b, ProductMode mode);
// w^{*n} for the given product.
LinComb power(const LinComb& w, int n, ProductMode mode);

// S(w y) = gamma(w) y with gamma(X) = X, gamma(Y) = X + Y; S(1) = 1.
LinComb s_map(const LinComb& w);
// The inverse: Y -> Y - X before the final letter.
LinComb s_inverse(const LinComb& w);

enum class RegStrategy {
    // Peel leading z1's with z1 * z1^(j-1) u = j z1^j u + (fewer leading z1's).
    leading,
    // Solve for w in the basis u * z1^{*i}, u admissible, by exact elimination.
    linear_solve,
};

// Stuffle regularization: every word rewritten over admissible words with
// z1^{*i} replaced by V^i (carried in the Coef).
LinComb regularize(const LinComb& w, RegStrategy strategy = RegStrategy::leading);

enum class EvalTarget { t, t_star, t_reg, t_star_reg };

// Numerical value of a combination; V is substituted for the formal V and
// log 2 for L.
TrackedReal eval_map(const LinComb& w, EvalTarget target, const LevelParams& lv, const Precision& p,
                     const Rational& V = 0);

struct SidePair {
    TrackedReal lhs;
    TrackedReal rhs;
};

// Sum over all permutations of ks versus the set-partition expansion.
SidePair symmetric_sum_sides(const Index& ks, bool star, const LevelParams& lv, const Precision& p);

// sum over k_1 + ... + k_n = k of t(m k_1, ..., m k_n) versus the
// alternating binomial sum of t*({m}^j) t({m}^(k-j)) (star: roles swapped).
SidePair restricted_sum_sides(int m, int k, int n, bool star, const LevelParams& lv, const Precision& p);

// lhs[n] = t({k}^n) (or t*), rhs[n] = the coefficient of x^(kn) in
// exp(sum_j (+-1)^(j-1) t(kj) x^(kj) / j), n = 0..nmax.
struct SeriesSides {
    std::vector<TrackedReal> lhs;
    std::vector<TrackedReal> rhs;
};
SeriesSides repeated_argument_sides(int k, int nmax, bool star, const LevelParams& lv, const Precision& p);

}  // namespace mtv
