#include "checks.hpp"

#include "mtv/errors.hpp"
#include "mtv/wordseries.hpp"

namespace mtv::detail {

namespace {

// Negates the last nonzero coefficient of f.
void sabotage(WordSeries& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (!f.at(i).is_zero()) {
            f.at(i) = -f.at(i);
            return;
        }
}

CheckOutcome run_identities(const std::vector<WordIdentity>& ids, int D, bool corrupt) {
    ExactOutcome out;
    for (std::size_t n = 0; n < ids.size() && out.holds; ++n) {
        auto [lhs, rhs] = word_series_sides(ids[n], D);
        if (corrupt && n == 0) sabotage(rhs);
        IdentityResult r = compare_word_series(lhs, rhs);
        if (!r.holds) {
            const Exponent& e = *r.first_failure;
            out.holds = false;
            out.where = to_string(ids[n]) + " u^" + std::to_string(e[0]) + " v^" + std::to_string(e[1]);
            out.lhs = r.lhs_coeff;
            out.rhs = r.rhs_coeff;
        }
    }
    return CheckOutcome{{}, out};
}

RegistryEntry words(const std::string& id, std::vector<WordIdentity> ids) {
    RegistryEntry e;
    e.id = id;
    e.defaults = {{"deg", "8"}};
    e.fn = [ids](const ParamReader& r, const Precision&, bool corrupt) {
        const long D = r.integer("deg");
        if (D < 0 || D > kMaxWordSeriesDegree || D % 2) throw UsageError("deg must be even and <= 12");
        return run_identities(ids, static_cast<int>(D), corrupt);
    };
    e.grid = [] { return std::vector<Params>{{{"deg", "8"}}}; };
    return e;
}

}  // namespace

void register_word_checks(std::vector<RegistryEntry>& out) {
    out.push_back(words("words_T", {WordIdentity::T_star_eq, WordIdentity::T_hat_closed,
                                    WordIdentity::T_hat_star_closed, WordIdentity::T_hat_star_eq}));
    out.push_back(words("words_P", {WordIdentity::P_star_eq, WordIdentity::P_hat_closed,
                                    WordIdentity::P_hat_star_closed, WordIdentity::P_hat_star_eq}));
    out.push_back(words("words_unit", {WordIdentity::SSstar_unit}));
}

}  // namespace mtv::detail
