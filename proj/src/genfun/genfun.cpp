#include "mtv/genfun.hpp"

#include "mtv/errors.hpp"
#include "mtv/hypergeom.hpp"
#include "mtv/indices.hpp"
#include "mtv/numerics.hpp"
#include "mtv/parallel.hpp"

#include <map>

namespace mtv {

namespace {

void check_degree(int D) {
    if (D < 0 || D > kMaxSeriesDegree) throw UsageError("series degree out of range (0.." + std::to_string(kMaxSeriesDegree) + ")");
}

RSeries rconst(int nv, int D, const Rational& q) { return RSeries::constant(nv, D, Rational(0), q); }
RSeries rvar(int nv, int D, int i) { return RSeries::variable(nv, D, Rational(0), Rational(1), i); }

TSeries tzero(int nv, int D, const Precision& p) { return TSeries(nv, D, TrackedReal(p.bits())); }

// Collects (monomial, index) pairs and fills a series from one batch call.
struct Accumulator {
    std::vector<TValueRequest> reqs;
    std::vector<long> slot;

    void add(const LevelParams& lv, Index k, bool star, long s) {
        reqs.push_back({lv, std::move(k), star});
        slot.push_back(s);
    }
    void flush(TSeries& out, const Precision& p) {
        std::vector<TrackedReal> vals = t_values_batch(reqs, p);
        for (std::size_t i = 0; i < vals.size(); ++i) out.at(slot[i]) += vals[i];
    }
};

long slot_of(const TSeries& s, const Exponent& e) {
    long i = s.basis().find(e);
    if (i < 0) throw UsageError("exponent outside the truncation");
    return i;
}

Rational rpow(const Rational& z, long k) {
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= z;
    return r;
}

TSeries finish(const TSeries& sum, const RSeries& prefactor, const Rational& scale, const Precision& p) {
    RSeries pre = prefactor;
    pre *= scale;
    return to_tracked(pre, p.bits()) * sum;
}

}  // namespace

TSeries lhs_ohno_zagier(const LevelParams& lv, int D, const Precision& p, bool star) {
    validate_level(lv);
    check_degree(D);
    TSeries out = tzero(3, D, p);
    Accumulator acc;
    for (std::size_t m = 0; m < out.size(); ++m) {
        const Exponent& e = out.exponent(m);
        const int s = e[kVarW] + 1;
        const int n = e[kVarV] + s;
        const int k = e[kVarU] + n + s;
        for (auto& idx : enumerate_I0(k, n, s)) acc.add(lv, idx, star, static_cast<long>(m));
    }
    acc.flush(out, p);
    return out;
}

TSeries lhs_ohno_zagier_z(const LevelParams& lv, int D, const Precision& p, bool star, const Rational& z) {
    validate_level(lv);
    check_degree(D);
    TSeries out = tzero(3, D, p);
    LParams lp{lv, star ? 0 : lv.N, z};
    for (std::size_t m = 0; m < out.size(); ++m) {
        const Exponent& e = out.exponent(m);
        const int s = e[kVarW] + 1;
        const int n = e[kVarV] + s;
        const int k = e[kVarU] + n + s;
        for (auto& idx : enumerate_I0(k, n, s)) out.at(m) += L_value(lp, idx, p);
    }
    return out;
}

TSeries rhs_ohno_zagier(const LevelParams& lv, int D, const Precision& p, bool star, const Rational& z, long n_max) {
    validate_level(lv);
    check_degree(D);
    if (z <= 0 || z > 1) throw DomainError("z must lie in (0, 1]");
    const Rational N = lv.N, a = lv.a;
    const RSeries one = rconst(3, D, 1);
    const RSeries u = rvar(3, D, kVarU), v = rvar(3, D, kVarV), w = rvar(3, D, kVarW);
    const Rational iN = 1 / N, iN2 = iN * iN;

    HyperSum hs;
    hs.rho = rpow(z, lv.N);
    hs.n_max = n_max;
    RSeries prefactor;
    if (!star) {
        RSeries e1 = (one * (2 * a) - u + v) * iN;
        RSeries e2 = (one * (a * a) - u * a + v * a - u * v + w) * iN2;
        hs.upper.push_back(HyperParam::symmetric(e1, e2));
        hs.lower.push_back(HyperParam::single(one * (a / N + 1)));
        hs.lower.push_back(HyperParam::single((one * a - u) * iN + one));
        prefactor = reciprocal(one * (a * a) - u * a);
    } else {
        hs.upper.push_back(HyperParam::single(one * (a / N)));
        hs.upper.push_back(HyperParam::single((one * a - u) * iN));
        const Rational aN = a + N;
        RSeries e1 = (one * (2 * aN) - u - v) * iN;
        RSeries e2 = (one * (aN * aN) - u * aN - v * aN + u * v - w) * iN2;
        hs.lower.push_back(HyperParam::symmetric(e1, e2));
        prefactor = reciprocal(one * (a * a) - u * a - v * a + u * v - w);
    }
    return finish(hyper_series_sum(hs, p), prefactor, rpow(z, lv.a), p);
}

TSeries height_one_lhs(const LevelParams& lv, HeightOneMode mode, int m, bool star, int D, const Precision& p) {
    validate_level(lv);
    check_degree(D);
    Accumulator acc;
    if (mode == HeightOneMode::two_variable) {
        TSeries out = tzero(2, D, p);
        for (std::size_t i = 0; i < out.size(); ++i) {
            const Exponent& e = out.exponent(i);
            Index idx(e[1] + 1, 1);
            idx[0] = e[0] + 2;
            acc.add(lv, idx, star, static_cast<long>(i));
        }
        acc.flush(out, p);
        return out;
    }
    if (m < 2) throw UsageError("fixed-m height one needs m >= 2");
    TSeries out = tzero(1, D, p);
    for (int j = 0; j <= D; ++j) {
        Index idx(j + 1, 1);
        idx[0] = m;
        acc.add(lv, idx, star, slot_of(out, Exponent{j}));
    }
    acc.flush(out, p);
    return out;
}

TSeries height_one_series(const LevelParams& lv, HeightOneMode mode, int m, bool star, int D, const Precision& p,
                          long n_max) {
    validate_level(lv);
    check_degree(D);
    const Rational N = lv.N, a = lv.a;
    const Rational iN = 1 / N;
    HyperSum hs;
    hs.n_max = n_max;
    RSeries prefactor;
    if (mode == HeightOneMode::two_variable) {
        const RSeries one = rconst(2, D, 1), u = rvar(2, D, 0), v = rvar(2, D, 1);
        if (!star) {
            hs.upper.push_back(HyperParam::single((one * a - u) * iN));
            hs.upper.push_back(HyperParam::single((one * a + v) * iN));
            hs.lower.push_back(HyperParam::single(one * ((a + N) / N)));
            hs.lower.push_back(HyperParam::single((one * (a + N) - u) * iN));
            prefactor = reciprocal(one * (a * a) - u * a);
        } else {
            hs.upper.push_back(HyperParam::single(one * (a / N)));
            hs.upper.push_back(HyperParam::single((one * a - u) * iN));
            hs.lower.push_back(HyperParam::single((one * (a + N) - u) * iN));
            hs.lower.push_back(HyperParam::single((one * (a + N) - v) * iN));
            prefactor = reciprocal((one * a - u) * (one * a - v));
        }
    } else {
        if (m < 2) throw UsageError("fixed-m height one needs m >= 2");
        const RSeries one = rconst(1, D, 1), v = rvar(1, D, 0);
        if (!star) {
            hs.upper.push_back(HyperParam::single((one * a + v) * iN));
            for (int i = 1; i < m; ++i) hs.upper.push_back(HyperParam::single(one * (a / N)));
            for (int i = 0; i < m; ++i) hs.lower.push_back(HyperParam::single(one * ((a + N) / N)));
            prefactor = one * (1 / rpow(a, m));
        } else {
            for (int i = 0; i < m; ++i) hs.upper.push_back(HyperParam::single(one * (a / N)));
            hs.lower.push_back(HyperParam::single((one * (a + N) - v) * iN));
            for (int i = 1; i < m; ++i) hs.lower.push_back(HyperParam::single(one * ((a + N) / N)));
            prefactor = reciprocal((one * a - v) * rpow(a, m - 1));
        }
    }
    return finish(hyper_series_sum(hs, p), prefactor, Rational(1), p);
}

std::vector<RSeries> newton_power_sums(const RSeries& e1, const RSeries& e2, int nmax) {
    std::vector<RSeries> out;
    out.push_back(RSeries::constant(e1.nvars(), e1.degree(), Rational(0), Rational(2)));
    if (nmax >= 1) out.push_back(e1);
    for (int n = 2; n <= nmax; ++n) out.push_back(e1 * out[n - 1] - e2 * out[n - 2]);
    return out;
}

std::vector<RSeries> maximal_height_exponent(bool star, int D) {
    check_degree(D);
    const RSeries u = rvar(2, D, 0), w = rvar(2, D, 1);
    std::vector<RSeries> pn = newton_power_sums(u, star ? -w : w, 2 * D);
    std::vector<RSeries> out;
    RSeries un = rconst(2, D, 1);
    un = un * u;
    for (int n = 2; n <= 2 * D; ++n) {
        un = un * u;
        RSeries c = star ? pn[n] - un : un - pn[n];
        c *= Rational(1, n);
        out.push_back(c);
    }
    return out;
}

SeriesPair maximal_height_series(const LevelParams& lv, bool star, int D, const Precision& p) {
    validate_level(lv);
    check_degree(D);
    SeriesPair r{tzero(2, D, p), tzero(2, D, p)};
    r.lhs.at(0) = TrackedReal(1L, p.bits());
    Accumulator acc;
    for (std::size_t i = 1; i < r.lhs.size(); ++i) {
        const Exponent& e = r.lhs.exponent(i);
        const int n = e[1];
        if (n == 0) continue;
        const int k = e[0] + 2 * n;
        for (auto& idx : enumerate_I0(k, n, n)) acc.add(lv, idx, star, static_cast<long>(i));
    }
    acc.flush(r.lhs, p);

    std::vector<RSeries> c = maximal_height_exponent(star, D);
    TSeries expo = tzero(2, D, p);
    for (int n = 2; n <= 2 * D; ++n) {
        TSeries t = to_tracked(c[n - 2], p.bits());
        t.scale(single_t(lv, n, p));
        expo += t;
    }
    r.rhs = exp_nilpotent(expo, TrackedReal(1L, p.bits()));
    return r;
}

WeightedSums weighted_sum_sides(long a, int k, const Precision& p) {
    if (a < 1) throw UsageError("weighted sum needs a >= 1");
    if (k < 2 || k > kMaxWeight) throw UsageError("weighted sum weight out of range");
    const LevelParams lv{2 * a, a};
    const long bits = p.bits();
    std::vector<TValueRequest> reqs;
    std::vector<int> depth_of;
    for (int n = 1; n < k; ++n)
        for (auto& idx : enumerate_I0(k, n)) {
            reqs.push_back({lv, idx, false});
            reqs.push_back({lv, idx, true});
            depth_of.push_back(n);
        }
    std::vector<TrackedReal> vals = t_values_batch(reqs, p);
    WeightedSums ws{TrackedReal(bits), TrackedReal(bits), TrackedReal(bits)};
    for (std::size_t i = 0; i < depth_of.size(); ++i) {
        const int n = depth_of[i];
        const long pw = 1L << (n - 1);
        ws.lhs += vals[2 * i] * pw;
        ws.lhs_star += vals[2 * i + 1] * (((k - n - 1) % 2 == 0) ? pw : -pw);
    }

    // Finite sum over n + n_1 + ... + n_m = k - 2, n_i >= 2.
    const LevelParams t2{2, 1};
    std::vector<TrackedReal> tv(k + 1, TrackedReal(bits));
    for (int j = 2; j <= k; ++j) tv[j] = single_t(t2, j, p);
    const TrackedReal l2 = constant(Constant::log2, p);
    for (int n = 0; n <= k - 2; ++n) {
        const int rest = k - 2 - n;
        for (int m = 0; 2 * m <= rest; ++m) {
            std::vector<Index> parts = m == 0 ? (rest == 0 ? std::vector<Index>{Index{}} : std::vector<Index>{})
                                              : compositions(rest, m, 2);
            for (const auto& ni : parts) {
                Rational coef = Rational(Integer(1) << (n + 2 * m));
                coef /= factorial(n) * factorial(m);
                Integer ak = 1;
                for (int i = 0; i < k; ++i) ak *= a;
                coef /= ak;
                TrackedReal term = tv[2];
                for (int j : ni) {
                    Integer h = (Integer(1) << (j - 1)) - 1;
                    Integer f = (Integer(1) << j) - 1;
                    coef *= Rational(h) / Rational(f * j);
                    term *= tv[j];
                }
                term *= pow_int(l2, n);
                term *= coef;
                ws.rhs += term;
            }
        }
    }
    return ws;
}

TrackedReal weighted_sum_rhs_series(long a, int k, const Precision& p) {
    if (a < 1 || k < 2) throw UsageError("weighted sum needs a >= 1 and k >= 2");
    const int D = k - 2;
    const long bits = p.bits();
    const LevelParams t2{2, 1};
    TSeries expo(1, D, TrackedReal(bits));
    if (D >= 1) {
        TrackedReal c1 = constant(Constant::log2, p) * 2L;
        c1 *= Rational(1, a);
        expo.set(Exponent{1}, c1);
    }
    for (int n = 2; n <= D; ++n) {
        Integer an = 1;
        for (int i = 0; i < n; ++i) an *= a;
        Rational c = Rational(4 * ((Integer(1) << (n - 1)) - 1)) / Rational(n * an * ((Integer(1) << n) - 1));
        expo.set(Exponent{n}, single_t(t2, n, p) * c);
    }
    TSeries e = exp_nilpotent(expo, TrackedReal(1L, bits));
    TrackedReal r = e.coeff(Exponent{D});
    r *= single_t(t2, 2, p);
    r *= Rational(1, a * a);
    return r;
}

}  // namespace mtv
