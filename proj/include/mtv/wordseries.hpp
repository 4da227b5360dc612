#pragma once

#include "mtv/stuffle.hpp"

#include <optional>
#include <string>

namespace mtv {

// Series in (u, v) with word coefficients; products are stuffle products
// coefficientwise. Only even total degrees occur.
using WordSeries = Series<LinComb>;

inline constexpr int kMaxWordSeriesDegree = 12;

WordSeries word_series_zero(int D);

// S(x) = sum (-1)^n z2^n x^(2n); star: sum S(z2^n) x^(2n). `var` picks x = u (0)
// or x = v (1).
WordSeries series_S(int var, bool star, int D);
// A(x) = sum_{r>=1} z_(2r+1) x^(2r); B(x) the same with weights (1 - 2^(-2r)).
WordSeries series_A(int var, int D);
WordSeries series_B(int var, int D);

// T(u,v) = sum (-1)^(a+b) z2^a z3 z2^b u^(2a) v^(2b); star: S of each word.
WordSeries series_T(bool star, int D);
// Same with z1 in place of z3.
WordSeries series_P(bool star, int D);

// The hatted series built term by term from their H and J coefficients.
WordSeries series_T_hat(bool star, int D);
WordSeries series_P_hat(bool star, int D);

// The closed forms in A, B and S. For star these are the right-hand sides
// with S* in place of S, as functions of (u, v).
WordSeries closed_T_hat(bool star, int D);
WordSeries closed_P_hat(bool star, int D);

WordSeries swap_uv(const WordSeries& f);
// f / (uv) truncated at degree D; throws DomainError unless uv divides f.
WordSeries divide_by_uv(const WordSeries& f, int D);
// f(x) for x = c_u u + c_v v, where f is a series in variable 0.
WordSeries substitute_half(const WordSeries& f, const Rational& cu, const Rational& cv);

enum class WordIdentity {
    T_star_eq,          // T*(u,v) = T(v,u) * S*(u) * S*(v)
    P_star_eq,          // P*(u,v) = P(v,u) * S*(u) * S*(v)
    SSstar_unit,        // S(u) * S*(u) = 1
    T_hat_closed,       // T-hat equals its A/B/S closed form
    T_hat_star_closed,  // T-hat*(u,v) equals the starred closed form at (u,v)
    T_hat_star_closed_swapped,  // T-hat*(v,u) equals the starred closed form at (u,v)
    P_hat_closed,
    P_hat_star_closed,
    T_hat_star_eq,  // T-hat*(u,v) = T-hat(v,u) * S*(u) * S*(v)
    P_hat_star_eq,  // P-hat*(u,v) = P-hat(v,u) * S*(u) * S*(v)
};

struct IdentityResult {
    bool holds = true;
    std::optional<Exponent> first_failure;
    std::string lhs_coeff;  // at the first failure
    std::string rhs_coeff;
    std::size_t coefficients_checked = 0;
};

// Both sides of an identity. D even, 0 <= D <= 12.
std::pair<WordSeries, WordSeries> word_series_sides(WordIdentity id, int D);
IdentityResult word_series_identity(WordIdentity id, int D);
IdentityResult compare_word_series(const WordSeries& lhs, const WordSeries& rhs);

std::string to_string(WordIdentity id);
// Throws UsageError on an unknown name.
WordIdentity parse_word_identity(const std::string& name);
std::vector<WordIdentity> all_word_identities();

}  // namespace mtv
