#include "checks.hpp"

#include "mtv/errors.hpp"
#include "mtv/evaluations.hpp"
#include "mtv/numerics.hpp"
#include "mtv/stuffle.hpp"

#include <algorithm>
#include <functional>

namespace mtv::detail {

namespace {

LevelParams level(const ParamReader& r) {
    LevelParams lv{r.integer("N"), r.integer("a")};
    validate_level(lv);
    return lv;
}

int small_int(const ParamReader& r, const std::string& key, long lo, long hi) {
    const long v = r.integer(key);
    if (v < lo || v > hi)
        throw UsageError(key + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

// Multisets of parts >= 2 (as nondecreasing lists) with depth <= dmax and
// weight <= wmax.
void multisets(int dmax, int wmax, Index& cur, std::vector<Index>& out) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == dmax) return;
    const int lo = cur.empty() ? 2 : cur.back();
    for (int k = lo; weight(cur) + k <= wmax; ++k) {
        cur.push_back(k);
        multisets(dmax, wmax, cur, out);
        cur.pop_back();
    }
}

RegistryEntry symsum() {
    RegistryEntry e;
    e.id = "prop_symsum";
    e.defaults = {{"N", "2"}, {"a", "1"}, {"index", "2,3"}, {"star", "0"}};
    e.fn = [](const ParamReader& r, const Precision& p, bool) {
        SidePair s = symmetric_sum_sides(r.index("index"), r.flag("star"), level(r), p);
        return CheckOutcome{{{"permutation sum vs partition sum", s.lhs, s.rhs}}, std::nullopt};
    };
    e.grid = [] {
        std::vector<Index> ms;
        Index cur;
        multisets(4, 10, cur, ms);
        std::vector<Params> g;
        for (auto [N, a] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}})
            for (int star = 0; star <= 1; ++star)
                for (const auto& k : ms)
                    g.push_back({{"N", std::to_string(N)},
                                 {"a", std::to_string(a)},
                                 {"index", index_to_string(k)},
                                 {"star", std::to_string(star)}});
        return g;
    };
    return e;
}

RegistryEntry reparg() {
    RegistryEntry e;
    e.id = "cor_reparg";
    e.defaults = {{"N", "2"}, {"a", "1"}, {"k", "2"}, {"n", "6"}, {"star", "0"}};
    e.fn = [](const ParamReader& r, const Precision& p, bool) {
        const int k = small_int(r, "k", 2, kMaxWeight);
        const int n = small_int(r, "n", 0, kMaxWeight);
        SeriesSides s = repeated_argument_sides(k, n, r.flag("star"), level(r), p);
        CheckOutcome out;
        for (std::size_t i = 0; i < s.lhs.size(); ++i)
            out.numeric.push_back({"x^" + std::to_string(k * static_cast<int>(i)), s.lhs[i], s.rhs[i]});
        return out;
    };
    e.grid = [] {
        std::vector<Params> g;
        for (auto [N, a] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}})
            for (int k : {2, 3})
                for (int star = 0; star <= 1; ++star)
                    g.push_back({{"N", std::to_string(N)},
                                 {"a", std::to_string(a)},
                                 {"k", std::to_string(k)},
                                 {"n", "6"},
                                 {"star", std::to_string(star)}});
        return g;
    };
    return e;
}

RegistryEntry secant() {
    RegistryEntry e;
    e.id = "prop_secant";
    e.defaults = {{"n", "2"}};
    e.fn = [](const ParamReader& r, const Precision& p, bool) {
        const int n = small_int(r, "n", 1, 12);
        TrackedReal lhs = t_star_value({2, 1}, Index(static_cast<std::size_t>(n), 2), p);
        return CheckOutcome{{{"t*({2}^n) vs secant coefficient", lhs, sec_genfun(n, p)}}, std::nullopt};
    };
    e.grid = [] {
        std::vector<Params> g;
        for (int n = 1; n <= 6; ++n) g.push_back({{"n", std::to_string(n)}});
        return g;
    };
    return e;
}

RegistryEntry residues() {
    RegistryEntry e;
    e.id = "remark_residues";
    e.defaults = {{"N", "3"}, {"k", "4"}};
    e.fn = [](const ParamReader& r, const Precision& p, bool) {
        const long N = r.integer("N");
        const int k = small_int(r, "k", 2, kMaxWeight);
        if (N < 1) throw UsageError("N must be >= 1");
        TrackedReal s(p.bits());
        for (long a = 1; a <= N; ++a) s += single_t({N, a}, k, p);
        return CheckOutcome{{{"sum over residues vs zeta", s, zeta(k, p)}}, std::nullopt};
    };
    e.grid = [] {
        std::vector<Params> g;
        for (int N = 1; N <= 5; ++N)
            for (int k = 2; k <= 8; ++k) g.push_back({{"N", std::to_string(N)}, {"k", std::to_string(k)}});
        return g;
    };
    return e;
}

RegistryEntry restricted() {
    RegistryEntry e;
    e.id = "prop_restricted";
    e.defaults = {{"N", "2"}, {"a", "1"}, {"m", "2"}, {"k", "3"}, {"n", "2"}, {"star", "0"}};
    e.fn = [](const ParamReader& r, const Precision& p, bool) {
        SidePair s = restricted_sum_sides(small_int(r, "m", 2, kMaxWeight), small_int(r, "k", 1, kMaxWeight),
                                          small_int(r, "n", 1, kMaxWeight), r.flag("star"), level(r), p);
        return CheckOutcome{{{"composition sum vs binomial sum", s.lhs, s.rhs}}, std::nullopt};
    };
    e.grid = [] {
        std::vector<Params> g;
        for (auto [N, a] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}})
            for (int m : {2, 3})
                for (int k = 1; k <= 5; ++k)
                    for (int n = 1; n <= k; ++n)
                        for (int star = 0; star <= 1; ++star)
                            g.push_back({{"N", std::to_string(N)},
                                         {"a", std::to_string(a)},
                                         {"m", std::to_string(m)},
                                         {"k", std::to_string(k)},
                                         {"n", std::to_string(n)},
                                         {"star", std::to_string(star)}});
        return g;
    };
    return e;
}

}  // namespace

void register_sum_checks(std::vector<RegistryEntry>& out) {
    out.push_back(symsum());
    out.push_back(reparg());
    out.push_back(secant());
    out.push_back(residues());
    out.push_back(restricted());
}

}  // namespace mtv::detail
