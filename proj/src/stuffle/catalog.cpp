#include "mtv/errors.hpp"
#include "mtv/wordseries.hpp"

namespace mtv {

namespace {

struct Named {
    WordIdentity id;
    const char* name;
};

constexpr Named kNames[] = {
    {WordIdentity::T_star_eq, "T_star_eq"},
    {WordIdentity::P_star_eq, "P_star_eq"},
    {WordIdentity::SSstar_unit, "SSstar_unit"},
    {WordIdentity::T_hat_closed, "T_hat_closed"},
    {WordIdentity::T_hat_star_closed, "T_hat_star_closed"},
    {WordIdentity::T_hat_star_closed_swapped, "T_hat_star_closed_swapped"},
    {WordIdentity::P_hat_closed, "P_hat_closed"},
    {WordIdentity::P_hat_star_closed, "P_hat_star_closed"},
    {WordIdentity::T_hat_star_eq, "T_hat_star_eq"},
    {WordIdentity::P_hat_star_eq, "P_hat_star_eq"},
};

// f(v,u) * S*(u) * S*(v)
WordSeries star_transport(const WordSeries& f, int D) {
    return swap_uv(f) * series_S(0, true, D) * series_S(1, true, D);
}

}  // namespace

IdentityResult compare_word_series(const WordSeries& lhs, const WordSeries& rhs) {
    if (lhs.degree() != rhs.degree() || lhs.nvars() != rhs.nvars())
        throw UsageError("word series with different shapes");
    IdentityResult r;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        ++r.coefficients_checked;
        if (lhs.at(i) != rhs.at(i)) {
            r.holds = false;
            r.first_failure = lhs.exponent(i);
            r.lhs_coeff = lhs.at(i).to_string();
            r.rhs_coeff = rhs.at(i).to_string();
            return r;
        }
    }
    return r;
}

std::pair<WordSeries, WordSeries> word_series_sides(WordIdentity id, int D) {
    if (D < 0 || D > kMaxWordSeriesDegree || D % 2) throw UsageError("word series degree must be even and <= 12");
    switch (id) {
        case WordIdentity::T_star_eq:
            return {series_T(true, D), star_transport(series_T(false, D), D)};
        case WordIdentity::P_star_eq:
            return {series_P(true, D), star_transport(series_P(false, D), D)};
        case WordIdentity::SSstar_unit: {
            WordSeries one = word_series_zero(D);
            one.at(0) = LinComb(Rational(1));
            return {series_S(0, false, D) * series_S(0, true, D), one};
        }
        case WordIdentity::T_hat_closed:
            return {series_T_hat(false, D), closed_T_hat(false, D)};
        case WordIdentity::T_hat_star_closed:
            return {series_T_hat(true, D), closed_T_hat(true, D)};
        case WordIdentity::T_hat_star_closed_swapped:
            return {swap_uv(series_T_hat(true, D)), closed_T_hat(true, D)};
        case WordIdentity::P_hat_closed:
            return {series_P_hat(false, D), closed_P_hat(false, D)};
        case WordIdentity::P_hat_star_closed:
            return {series_P_hat(true, D), closed_P_hat(true, D)};
        case WordIdentity::T_hat_star_eq:
            return {series_T_hat(true, D), star_transport(series_T_hat(false, D), D)};
        case WordIdentity::P_hat_star_eq:
            return {series_P_hat(true, D), star_transport(series_P_hat(false, D), D)};
    }
    throw UsageError("unknown word identity");
}

IdentityResult word_series_identity(WordIdentity id, int D) {
    auto [lhs, rhs] = word_series_sides(id, D);
    return compare_word_series(lhs, rhs);
}

std::string to_string(WordIdentity id) {
    for (const auto& n : kNames)
        if (n.id == id) return n.name;
    throw UsageError("unknown word identity");
}

WordIdentity parse_word_identity(const std::string& name) {
    for (const auto& n : kNames)
        if (name == n.name) return n.id;
    throw UsageError("unknown word identity '" + name + "'");
}

std::vector<WordIdentity> all_word_identities() {
    std::vector<WordIdentity> v;
    for (const auto& n : kNames) v.push_back(n.id);
    return v;
}

}  // namespace mtv
