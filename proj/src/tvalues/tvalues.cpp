#include "mtv/tvalues.hpp"

#include "mtv/errors.hpp"
#include "mtv/numerics.hpp"

#include <cmath>
#include <sstream>

namespace mtv {

void validate_level(const LevelParams& lv) {
    if (lv.N < 1) throw UsageError("level N must be >= 1");
    if (lv.a < 1 || lv.a > lv.N) throw UsageError("residue a must satisfy 1 <= a <= N");
}

TrackedReal single_t(const LevelParams& lv, int s, const Precision& p) {
    validate_level(lv);
    if (s < 2) throw DivergenceError("single t-value needs s >= 2");
    TrackedReal h = hurwitz_zeta(s, Rational(lv.a, lv.N), p);
    h *= TrackedReal(Rational(1), p.bits()) / pow_int(TrackedReal(lv.N, p.bits()), s);
    enforce(h, p);
    return h;
}

namespace {

TrackedReal nested(const LevelParams& lv, const Index& k, bool weak, const Precision& p) {
    validate_level(lv);
    if (!is_positive(k)) throw UsageError("index entries must be positive");
    if (k.empty()) return TrackedReal(1L, p.bits());
    if (k.front() < 2) throw DivergenceError("index (" + index_to_string(k) + ") is not admissible");
    if (k.size() == 1) return single_t(lv, k.front(), p);
    const long start = weak ? lv.a : lv.a - lv.N;
    auto prof = detail::tail_profile(lv.N, start, start, k, weak, p);
    TrackedReal v = prof.values[k.size()][0];
    enforce(v, p);
    return v;
}

}  // namespace

TrackedReal t_value(const LevelParams& lv, const Index& k, const Precision& p) { return nested(lv, k, false, p); }

TrackedReal t_star_value(const LevelParams& lv, const Index& k, const Precision& p) {
    return nested(lv, k, true, p);
}

TrackedReal L_value(const LParams& lp, const Index& k, const Precision& p) {
    const LevelParams& lv = lp.level;
    validate_level(lv);
    if (lp.b < 0) throw UsageError("shift b must be >= 0");
    if (lp.z < 0 || lp.z > 1) throw DomainError("L_value needs z in [0, 1]");
    if (!is_positive(k)) throw UsageError("index entries must be positive");
    const long bits = p.bits();
    if (k.empty()) return TrackedReal(1L, bits);
    if (lp.z == 1) {
        if (lp.b == lv.N) return t_value(lv, k, p);
        if (lp.b == 0) return t_star_value(lv, k, p);
        throw DivergenceError("L_value at z = 1 needs b in {0, N}");
    }
    if (lp.z == 0) return TrackedReal(bits);

    const int n = static_cast<int>(k.size());
    const double zd = lp.z.get_d();
    const double target = p.inner_target();
    // Terms carry z^{m_1}; with S_1(m) <= (1 + ln m)^{n-1} the tail past M is
    // at most z^{M+1} B(M+1) / (1 - z (1 + 1/(M+1))^{n-1}).
    auto tail_bound = [&](long M) {
        const double m1 = static_cast<double>(M + 1);
        const double ratio = zd * std::pow(1.0 + 1.0 / m1, n - 1);
        if (ratio >= 1.0) return static_cast<double>(INFINITY);
        const double B = std::pow(1.0 + std::log(m1), n - 1);
        return std::exp((M + 1) * std::log(zd)) * B / (1.0 - ratio) * (1 + 1e-9);
    };
    long M = 16;
    while (!(tail_bound(M) <= target)) {
        M *= 2;
        if (M > 50'000'000L) throw PrecisionUnachievable("L_value: geometric tail too slow");
    }
    // Bisect down to the smallest adequate cutoff.
    long lo = M / 2, hi = M;
    while (hi - lo > 1) {
        long mid = (lo + hi) / 2;
        (tail_bound(mid) <= target ? hi : lo) = mid;
    }
    M = hi;

    const long N = lv.N, a = lv.a, b = lp.b;
    // S[m] for the current level, C[m] its cumulative sum along m - jN.
    std::vector<TrackedReal> S(M + 1, TrackedReal(bits)), C(M + 1, TrackedReal(bits));
    for (int i = n - 1; i >= 0; --i) {
        std::vector<TrackedReal> Snew(M + 1, TrackedReal(bits));
        for (long m = 1; m <= M; ++m) {
            if (i == n - 1) {
                if (m >= a && (m - a) % N == 0) Snew[m] = inv_pow(m, k[i], bits);
            } else {
                const long x = m - b;
                if (x >= 1 && !C[x].is_zero()) Snew[m] = inv_pow(m, k[i], bits) * C[x];
            }
        }
        S.swap(Snew);
        for (long m = 1; m <= M; ++m) {
            C[m] = S[m];
            if (m - N >= 1) C[m] += C[m - N];
        }
    }
    TrackedReal z(lp.z, bits);
    TrackedReal zp = z;
    TrackedReal acc(bits);
    for (long m = 1; m <= M; ++m) {
        if (!S[m].is_zero()) acc += zp * S[m];
        zp *= z;
    }
    acc.add_err(up(tail_bound(M)));
    enforce(acc, p);
    return acc;
}

TrackedReal ti_star(const Index& s, const std::vector<Rational>& zin, const Precision& p) {
    if (s.size() != zin.size()) throw UsageError("ti_star: index and argument lists differ in length");
    if (!is_positive(s)) throw UsageError("index entries must be positive");
    const long bits = p.bits();
    if (s.empty()) return TrackedReal(1L, bits);
    const int n = static_cast<int>(s.size());
    std::vector<Rational> z = zin;
    int sign = 1;
    for (auto& zi : z) {
        if (zi <= -1 || zi > 1) throw DomainError("ti_star arguments must lie in (-1, 1]");
        // z = -1 contributes (-1)^(2m-1) = -1 for every m.
        if (zi == -1) {
            sign = -sign;
            zi = 1;
        }
    }
    int i0 = -1;
    for (int i = 0; i < n; ++i)
        if (abs(z[i]) < 1) {
            i0 = i;
            break;
        }
    if (i0 < 0) {
        if (s.front() < 2) throw DivergenceError("ti_star diverges: s_1 = 1 with all |z_i| = 1");
        TrackedReal v = t_star_value({2, 1}, s, p);
        return sign < 0 ? -v : v;
    }
    if (i0 > 0 && s.front() < 2) throw DivergenceError("ti_star diverges: s_1 = 1 with |z_1| = 1");
    if (z[i0] == 0) return TrackedReal(bits);

    const double zd = std::fabs(z[i0].get_d());
    const int d = n - 1 - i0;
    const double target = p.inner_target();
    // Upper bound for the prefix factor: its value at m = 1.
    double wmax = 1.0;
    Index prefix(s.begin(), s.begin() + i0);
    if (i0 > 0) wmax = t_star_value({2, 1}, prefix, Precision(std::max(10, p.digits / 2))).mag() * 1.01;
    auto tail_bound = [&](long M) {
        const double x = 2.0 * M + 1.0;
        const double ratio = zd * zd * std::pow(1.0 + 1.0 / x, d);
        if (ratio >= 1.0) return static_cast<double>(INFINITY);
        const double B = std::pow(1.0 + std::log(x) / 2.0, d);
        return wmax * std::exp(x * std::log(zd)) * B / (1.0 - ratio) * (1 + 1e-9);
    };
    long M = 8;
    while (!(tail_bound(M) <= target)) {
        M *= 2;
        if (M > 50'000'000L) throw PrecisionUnachievable("ti_star: geometric tail too slow");
    }
    long lo = M / 2, hi = M;
    while (hi - lo > 1) {
        long mid = (lo + hi) / 2;
        (tail_bound(mid) <= target ? hi : lo) = mid;
    }
    M = hi;

    // Inner partial sums over m_{i0+1} >= ... >= m_n, cumulative in m.
    std::vector<TrackedReal> Q(M + 1, TrackedReal(1L, bits));
    for (int i = n - 1; i > i0; --i) {
        TrackedReal zi(z[i], bits);
        TrackedReal zsq = zi * zi;
        TrackedReal zp = zi;
        std::vector<TrackedReal> Qn(M + 1, TrackedReal(bits));
        for (long m = 1; m <= M; ++m) {
            TrackedReal term = zp * inv_pow(2 * m - 1, s[i], bits);
            term *= Q[m];
            Qn[m] = Qn[m - 1] + term;
            zp *= zsq;
        }
        Q.swap(Qn);
    }
    detail::TailProfile prof;
    if (i0 > 0) prof = detail::tail_profile(2, 1, 2 * M - 1, prefix, true, p);

    TrackedReal zi(z[i0], bits);
    TrackedReal zsq = zi * zi;
    TrackedReal zp = zi;
    TrackedReal acc(bits);
    for (long m = 1; m <= M; ++m) {
        TrackedReal term = zp * inv_pow(2 * m - 1, s[i0], bits);
        term *= Q[m];
        if (i0 > 0) term *= prof.values[i0][m - 1];
        acc += term;
        zp *= zsq;
    }
    acc.add_err(up(tail_bound(M)));
    if (sign < 0) acc = -acc;
    enforce(acc, p);
    return acc;
}

std::string value_cache_key(const LParams& lp, const Index& k, int digits) {
    std::ostringstream os;
    os << "t|" << lp.level.N << "|" << lp.level.a << "|" << lp.b << "|idx=" << index_to_string(k) << "|z="
       << lp.z.get_num() << "/" << lp.z.get_den() << "|" << digits;
    return os.str();
}

}  // namespace mtv
