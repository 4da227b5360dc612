#include "mtv/errors.hpp"
#include "mtv/numerics.hpp"
#include "mtv/parallel.hpp"
#include "mtv/stuffle.hpp"

#include <algorithm>

namespace mtv {

namespace {

TrackedReal one(const Precision& p) { return TrackedReal(1L, p.bits()); }

Index repeated(int m, int n) { return Index(static_cast<std::size_t>(n), m); }

// Single values t(s) for s = 2..smax; index s of the result.
std::vector<TrackedReal> singles(const LevelParams& lv, int smax, const Precision& p) {
    std::vector<TValueRequest> reqs;
    for (int s = 2; s <= smax; ++s) reqs.push_back({lv, {s}, false});
    std::vector<TrackedReal> v = t_values_batch(reqs, p);
    v.insert(v.begin(), 2, TrackedReal(p.bits()));
    return v;
}

}  // namespace

SidePair symmetric_sum_sides(const Index& ks, bool star, const LevelParams& lv, const Precision& p) {
    validate_level(lv);
    if (ks.empty()) throw UsageError("symmetric sum needs a nonempty index");
    if (static_cast<int>(ks.size()) > kMaxPartitionSize) throw UsageError("symmetric sum depth above 8");
    for (int k : ks)
        if (k < 2) throw DomainError("symmetric sum needs every entry >= 2");
    if (weight(ks) > kMaxWeight) throw UsageError("weight above the cap");

    // Distinct permutations, each standing for prod(mult!) permutations.
    Index sorted = ks;
    std::sort(sorted.begin(), sorted.end());
    long mult = 1;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        for (long f = 2; f <= static_cast<long>(j - i); ++f) mult *= f;
        i = j;
    }
    std::vector<TValueRequest> reqs;
    do {
        reqs.push_back({lv, sorted, star});
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    TrackedReal lhs(p.bits());
    for (const auto& v : t_values_batch(reqs, p)) lhs += v;
    lhs *= mult;

    const std::vector<TrackedReal> t1 = singles(lv, weight(ks), p);
    TrackedReal rhs(p.bits());
    for (const auto& part : set_partitions(static_cast<int>(ks.size()))) {
        TrackedReal term(star ? part.c : part.c_tilde, p.bits());
        for (const auto& block : part.blocks) {
            int s = 0;
            for (int i : block) s += ks[static_cast<std::size_t>(i - 1)];
            term *= t1[static_cast<std::size_t>(s)];
        }
        rhs += term;
    }
    return {lhs, rhs};
}

SidePair restricted_sum_sides(int m, int k, int n, bool star, const LevelParams& lv, const Precision& p) {
    validate_level(lv);
    if (m < 2) throw DomainError("restricted sum needs m > 1");
    if (n < 1 || k < n) throw UsageError("restricted sum needs k >= n >= 1");
    if (m * k > kMaxWeight) throw UsageError("weight above the cap");

    std::vector<TValueRequest> reqs;
    for (auto c : compositions(k, n)) {
        for (int& x : c) x *= m;
        reqs.push_back({lv, c, star});
    }
    const std::size_t nl = reqs.size();
    // t({m}^j) and t*({m}^j), j = 1..k
    for (int j = 1; j <= k; ++j) {
        reqs.push_back({lv, repeated(m, j), false});
        reqs.push_back({lv, repeated(m, j), true});
    }
    std::vector<TrackedReal> v = t_values_batch(reqs, p);
    TrackedReal lhs(p.bits());
    for (std::size_t i = 0; i < nl; ++i) lhs += v[i];
    auto rep = [&](int j, bool s) { return j == 0 ? one(p) : v[nl + 2 * static_cast<std::size_t>(j - 1) + (s ? 1 : 0)]; };

    TrackedReal rhs(p.bits());
    for (int j = 0; j <= k - n; ++j) {
        TrackedReal term = star ? rep(j, false) * rep(k - j, true) : rep(j, true) * rep(k - j, false);
        Rational c = binomial(k - j, n);
        const int e = star ? j : k - n - j;
        if (e % 2) c = -c;
        term *= c;
        rhs += term;
    }
    return {lhs, rhs};
}

SeriesSides repeated_argument_sides(int k, int nmax, bool star, const LevelParams& lv, const Precision& p) {
    validate_level(lv);
    if (k < 2) throw DomainError("repeated argument needs k > 1");
    if (nmax < 0 || k * nmax > kMaxWeight) throw UsageError("weight above the cap");
    SeriesSides out;
    std::vector<TValueRequest> reqs;
    for (int n = 1; n <= nmax; ++n) reqs.push_back({lv, repeated(k, n), star});
    for (int n = 1; n <= nmax; ++n) reqs.push_back({lv, {k * n}, false});
    std::vector<TrackedReal> v = t_values_batch(reqs, p);
    const std::size_t nm = static_cast<std::size_t>(nmax);

    out.lhs.push_back(one(p));
    for (std::size_t n = 0; n < nm; ++n) out.lhs.push_back(v[n]);
    // F = exp(G): n F_n = sum_j j G_j F_(n-j), with j G_j = (+-1)^(j-1) t(kj).
    out.rhs.push_back(one(p));
    for (int n = 1; n <= nmax; ++n) {
        TrackedReal s(p.bits());
        for (int j = 1; j <= n; ++j) {
            TrackedReal term = v[nm + static_cast<std::size_t>(j - 1)] * out.rhs[static_cast<std::size_t>(n - j)];
            if (!star && j % 2 == 0) term = -term;
            s += term;
        }
        s /= n;
        out.rhs.push_back(s);
    }
    return out;
}

}  // namespace mtv
