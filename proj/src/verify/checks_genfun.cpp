#include "checks.hpp"

#include "mtv/errors.hpp"
#include "mtv/genfun.hpp"

namespace mtv::detail {

namespace {

const std::vector<std::string> kUVW{"u", "v", "w"};
const std::vector<std::pair<long, long>> kSixLevels{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}};

LevelParams level(const ParamReader& r) {
    LevelParams lv{r.integer("N"), r.integer("a")};
    validate_level(lv);
    return lv;
}

long cutoff(const ParamReader& r) {
    const long n = r.integer("n_max");
    if (n < 100) throw UsageError("n_max must be >= 100");
    return n;
}

int degree(const ParamReader& r) {
    const long D = r.integer("deg");
    if (D < 0 || D > kMaxSeriesDegree) throw UsageError("deg must be in [0, 10]");
    return static_cast<int>(D);
}

RegistryEntry ohno_zagier(const std::string& id, bool star) {
    RegistryEntry e;
    e.id = id;
    e.defaults = {{"N", "1"}, {"a", "1"}, {"deg", "4"}, {"n_max", std::to_string(kDefaultNMax)}};
    e.fn = [star](const ParamReader& r, const Precision& p, bool) {
        const LevelParams lv = level(r);
        const int D = degree(r);
        TSeries lhs = lhs_ohno_zagier(lv, D, p, star);
        TSeries rhs = rhs_ohno_zagier(lv, D, p, star, 1, cutoff(r));
        return CheckOutcome{compare_series(lhs, rhs, kUVW), std::nullopt};
    };
    e.grid = [] {
        std::vector<Params> g;
        for (auto [N, a] : kSixLevels) g.push_back({{"N", std::to_string(N)}, {"a", std::to_string(a)}, {"deg", "4"}});
        return g;
    };
    return e;
}

RegistryEntry ohno_zagier_z(const std::string& id, bool star) {
    RegistryEntry e;
    e.id = id;
    e.defaults = {{"N", "1"}, {"a", "1"}, {"z", "1/2"}, {"deg", "2"}, {"n_max", std::to_string(kDefaultNMax)}};
    e.fn = [star](const ParamReader& r, const Precision& p, bool) {
        const LevelParams lv = level(r);
        const int D = degree(r);
        const Rational z = r.rational("z");
        TSeries lhs = lhs_ohno_zagier_z(lv, D, p, star, z);
        TSeries rhs = rhs_ohno_zagier(lv, D, p, star, z, cutoff(r));
        return CheckOutcome{compare_series(lhs, rhs, kUVW), std::nullopt};
    };
    e.grid = [] {
        std::vector<Params> g;
        for (long N = 1; N <= 3; ++N)
            for (long a = 1; a <= N; ++a)
                g.push_back({{"N", std::to_string(N)}, {"a", std::to_string(a)}, {"z", "1/2"}, {"deg", "2"}});
        return g;
    };
    return e;
}

RegistryEntry height_one() {
    RegistryEntry e;
    e.id = "cor_height1";
    // m = 0 selects the two-variable series.
    e.defaults = {{"N", "2"},    {"a", "1"},   {"m", "2"},
                  {"star", "0"}, {"deg", "2"}, {"n_max", std::to_string(kDefaultNMax)}};
    e.fn = [](const ParamReader& r, const Precision& p, bool) {
        const LevelParams lv = level(r);
        const int D = degree(r);
        const long m = r.integer("m");
        const bool star = r.flag("star");
        if (m != 0 && m < 2) throw UsageError("m must be 0 (two-variable) or >= 2");
        const HeightOneMode mode = m == 0 ? HeightOneMode::two_variable : HeightOneMode::fixed_m;
        const int mi = static_cast<int>(m);
        TSeries lhs = height_one_lhs(lv, mode, mi, star, D, p);
        TSeries rhs = height_one_series(lv, mode, mi, star, D, p, cutoff(r));
        const std::vector<std::string> names =
            mode == HeightOneMode::two_variable ? std::vector<std::string>{"u", "v"} : std::vector<std::string>{"v"};
        return CheckOutcome{compare_series(lhs, rhs, names), std::nullopt};
    };
    e.grid = [] {
        std::vector<Params> g;
        for (auto [N, a] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}})
            for (int star = 0; star <= 1; ++star) {
                for (int m : {2, 3})
                    g.push_back({{"N", std::to_string(N)},
                                 {"a", std::to_string(a)},
                                 {"m", std::to_string(m)},
                                 {"star", std::to_string(star)},
                                 {"deg", "2"}});
                g.push_back({{"N", std::to_string(N)},
                             {"a", std::to_string(a)},
                             {"m", "0"},
                             {"star", std::to_string(star)},
                             {"deg", "4"}});
            }
        return g;
    };
    return e;
}

// exact = 1: c_n(u, w) + c*_n(u, -w) = 0 for every n, i.e. the nonstar
// exponential times the star one at w -> -w is exactly 1.
CheckOutcome maxheight_exact(int D, bool corrupt) {
    std::vector<RSeries> c = maximal_height_exponent(false, D);
    std::vector<RSeries> cs = maximal_height_exponent(true, D);
    if (corrupt) cs[0] = -cs[0];
    ExactOutcome out;
    const std::vector<std::vector<Rational>> flip{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}};
    for (std::size_t i = 0; i < c.size() && out.holds; ++i) {
        RSeries s = c[i] + substitute_linear(cs[i], flip, 2, D);
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (s.at(j) == 0) continue;
            const Exponent& e = s.exponent(j);
            out.holds = false;
            out.where = "n=" + std::to_string(i + 2) + " u^" + std::to_string(e[0]) + " w^" + std::to_string(e[1]);
            out.lhs = c[i].at(j).get_str();
            out.rhs = Rational(c[i].at(j) - s.at(j)).get_str();
            break;
        }
    }
    return CheckOutcome{{}, out};
}

RegistryEntry max_height() {
    RegistryEntry e;
    e.id = "cor_maxheight";
    e.defaults = {{"N", "1"}, {"a", "1"}, {"star", "0"}, {"deg", "6"}, {"exact", "0"}};
    e.fn = [](const ParamReader& r, const Precision& p, bool corrupt) {
        const LevelParams lv = level(r);
        const int D = degree(r);
        const bool star = r.flag("star");
        if (r.flag("exact")) return maxheight_exact(D, corrupt);
        SeriesPair s = maximal_height_series(lv, star, D, p);
        return CheckOutcome{compare_series(s.lhs, s.rhs, {"u", "w"}), std::nullopt};
    };
    e.grid = [] {
        std::vector<Params> g;
        for (auto [N, a] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 2}})
            for (int star = 0; star <= 1; ++star)
                g.push_back({{"N", std::to_string(N)},
                             {"a", std::to_string(a)},
                             {"star", std::to_string(star)},
                             {"deg", "6"},
                             {"exact", "0"}});
        g.push_back({{"N", "1"}, {"a", "1"}, {"star", "0"}, {"deg", "8"}, {"exact", "1"}});
        return g;
    };
    return e;
}

RegistryEntry weighted(const std::string& id, bool expansion) {
    RegistryEntry e;
    e.id = id;
    e.defaults = {{"a", "1"}, {"k", "4"}};
    e.fn = [expansion](const ParamReader& r, const Precision& p, bool) {
        const long a = r.integer("a");
        const long k = r.integer("k");
        if (k < 2 || k > kMaxWeight) throw UsageError("k must be in [2, 24]");
        WeightedSums ws = weighted_sum_sides(a, static_cast<int>(k), p);
        CheckOutcome out;
        if (expansion) {
            out.numeric.push_back({"weighted t sum vs composition expansion", ws.lhs, ws.rhs});
            out.numeric.push_back({"weighted t* sum vs composition expansion", ws.lhs_star, ws.rhs});
        } else {
            const TrackedReal series = weighted_sum_rhs_series(a, static_cast<int>(k), p);
            out.numeric.push_back({"weighted t sum vs t* sum", ws.lhs, ws.lhs_star});
            out.numeric.push_back({"weighted t sum vs exponential series", ws.lhs, series});
        }
        return out;
    };
    e.grid = [] {
        std::vector<Params> g;
        for (int a = 1; a <= 2; ++a)
            for (int k = 2; k <= 8; ++k) g.push_back({{"a", std::to_string(a)}, {"k", std::to_string(k)}});
        return g;
    };
    return e;
}

}  // namespace

void register_genfun_checks(std::vector<RegistryEntry>& out) {
    out.push_back(ohno_zagier("thm11", false));
    out.push_back(ohno_zagier("thm12", true));
    out.push_back(ohno_zagier_z("thm27_z", false));
    out.push_back(ohno_zagier_z("thm29_z", true));
    out.push_back(height_one());
    out.push_back(max_height());
    out.push_back(weighted("prop_weighted", false));
    out.push_back(weighted("cor_weighted", true));
}

}  // namespace mtv::detail
