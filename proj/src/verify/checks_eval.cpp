#include "checks.hpp"

#include "mtv/errors.hpp"
#include "mtv/evaluations.hpp"
#include "mtv/stuffle.hpp"

namespace mtv::detail {

namespace {

const LevelParams kLevel2{2, 1};

EvalParams eval_params(const ParamReader& r, const Precision& p, bool with_v) {
    EvalParams ep;
    ep.a = static_cast<int>(r.integer("a"));
    ep.b = static_cast<int>(r.integer("b"));
    if (with_v) ep.V = r.rational("V");
    ep.p = p;
    if (ep.a < 0 || ep.b < 0 || ep.a + ep.b > kMaxEvalWeightParam) throw UsageError("need a, b >= 0 and a + b <= 5");
    return ep;
}

// {2}^a, middle, {2}^b
Index sandwich(int a, int middle, int b) {
    Index k(static_cast<std::size_t>(a), 2);
    k.push_back(middle);
    for (int i = 0; i < b; ++i) k.push_back(2);
    return k;
}

std::vector<Params> ab_grid(bool with_v) {
    std::vector<Params> g;
    for (int s = 0; s <= 3; ++s)
        for (int a = 0; a <= s; ++a) {
            const int b = s - a;
            if (!with_v) {
                g.push_back({{"a", std::to_string(a)}, {"b", std::to_string(b)}});
                continue;
            }
            for (const char* V : {"0", "1", "-2"})
                g.push_back({{"a", std::to_string(a)}, {"b", std::to_string(b)}, {"V", V}});
        }
    return g;
}

RegistryEntry two_three(const std::string& id, bool star) {
    RegistryEntry e;
    e.id = id;
    e.defaults = {{"a", "0"}, {"b", "0"}};
    e.fn = [star](const ParamReader& r, const Precision& p, bool) {
        const EvalParams ep = eval_params(r, p, false);
        const Index k = sandwich(ep.a, 3, ep.b);
        TrackedReal lhs = star ? t_star_value(kLevel2, k, p) : t_value(kLevel2, k, p);
        TrackedReal rhs = star ? thm41_rhs(ep) : murakami_rhs(ep);
        return CheckOutcome{{{"nested sum vs zeta evaluation", lhs, rhs}}, std::nullopt};
    };
    e.grid = [] { return ab_grid(false); };
    return e;
}

RegistryEntry one_two(const std::string& id, bool star) {
    RegistryEntry e;
    e.id = id;
    e.defaults = {{"a", "0"}, {"b", "0"}, {"V", "0"}};
    e.fn = [star](const ParamReader& r, const Precision& p, bool) {
        const EvalParams ep = eval_params(r, p, true);
        const LinComb w = LinComb::word(word_from_index(sandwich(ep.a, 1, ep.b)));
        TrackedReal lhs = eval_map(w, star ? EvalTarget::t_star_reg : EvalTarget::t_reg, kLevel2, p, ep.V);
        TrackedReal rhs = star ? thm42_rhs(ep) : charlton_rhs(ep);
        return CheckOutcome{{{"regularized value vs zeta evaluation", lhs, rhs}}, std::nullopt};
    };
    e.grid = [] { return ab_grid(true); };
    return e;
}

std::vector<Comparison> coeff_comparisons(const std::vector<CoeffCheck>& cs) {
    std::vector<Comparison> out;
    for (const auto& c : cs)
        out.push_back({"x^" + std::to_string(2 * c.a) + " y^" + std::to_string(2 * c.b), c.lhs, c.rhs});
    return out;
}

RegistryEntry gstar() {
    RegistryEntry e;
    e.id = "gstar";
    e.defaults = {{"deg", "4"}};
    e.fn = [](const ParamReader& r, const Precision& p, bool) {
        return CheckOutcome{coeff_comparisons(g_star_identity_check(static_cast<int>(r.integer("deg")), p)),
                            std::nullopt};
    };
    e.grid = [] { return std::vector<Params>{{{"deg", "4"}}}; };
    return e;
}

RegistryEntry ti4f3() {
    RegistryEntry e;
    e.id = "ti4f3";
    e.defaults = {{"z", "1/2"}, {"deg", "4"}};
    e.fn = [](const ParamReader& r, const Precision& p, bool) {
        return CheckOutcome{
            coeff_comparisons(ti_4f3_check(r.rational("z"), static_cast<int>(r.integer("deg")), p)), std::nullopt};
    };
    e.grid = [] { return std::vector<Params>{{{"z", "1/2"}, {"deg", "4"}}}; };
    return e;
}

}  // namespace

void register_eval_checks(std::vector<RegistryEntry>& out) {
    out.push_back(two_three("thm41", true));
    out.push_back(one_two("thm42", true));
    out.push_back(two_three("eval_murakami", false));
    out.push_back(one_two("eval_charlton", false));
    out.push_back(gstar());
    out.push_back(ti4f3());
}

}  // namespace mtv::detail
