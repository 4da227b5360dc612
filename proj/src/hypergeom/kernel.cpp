// Coefficientwise summation of hypergeometric-type series whose parameters
// are truncated power series.
//
// At rho = 1 the terms behave like T_n ~ C n^g (1 + O(1/n)) with a
// series-valued exponent g = sum b - sum c. Writing
//     log(T_n / T_{n-1}) = sum_r g_r n^(-r),
//     g_r = (-1)^(r+1)/r [sum (b-1)^r - sum (c-1)^r],
// and expanding the harmonic-type sums H_r(n) asymptotically gives
//     T_n = exp(K) n^(g0) exp(g' log n) exp(sum_s d_s n^(-s))
// where g0 is the rational constant part of g and g' = g - g0 is nilpotent.
// The tail past M then reduces to sums of n^(-sigma) log^l n, which are
// done by Euler-Maclaurin.

#include "mtv/errors.hpp"
#include "mtv/hypergeom.hpp"
#include "mtv/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace mtv {

using RSeries = Series<Rational>;
using TSeries = Series<TrackedReal>;

HyperParam HyperParam::single(RSeries b) {
    HyperParam h;
    h.pair = false;
    h.b = std::move(b);
    return h;
}

HyperParam HyperParam::symmetric(RSeries e1, RSeries e2) {
    HyperParam h;
    h.pair = true;
    h.e1 = std::move(e1);
    h.e2 = std::move(e2);
    return h;
}

namespace detail {

std::vector<TrackedReal> log_power_tail(const Rational& sigma, int lmax, long M, const Precision& p) {
    if (sigma <= 1) throw DivergenceError("log_power_tail needs sigma > 1");
    const long bits = p.bits();
    const double target = p.inner_target() * 1e-6;
    TrackedReal L = log(TrackedReal(M, bits));
    TrackedReal Ms = exp(-(L * sigma));  // M^(-sigma)
    TrackedReal Minv = TrackedReal(1L, bits) / TrackedReal(M, bits);
    std::vector<TrackedReal> Lp(lmax + 1, TrackedReal(1L, bits));
    for (int i = 1; i <= lmax; ++i) Lp[i] = Lp[i - 1] * L;
    const Rational sm1 = sigma - 1;

    std::vector<TrackedReal> out;
    for (int l = 0; l <= lmax; ++l) {
        // Integral: M^(1-sigma)/(sigma-1) sum_i l!/(l-i)! L^(l-i) / (sigma-1)^i
        TrackedReal integral(bits);
        Rational c = Rational(1) / sm1;
        for (int i = 0; i <= l; ++i) {
            integral += Lp[l - i] * c;
            c *= Rational(l - i) / sm1;
        }
        integral *= Ms;
        integral *= TrackedReal(M, bits);
        TrackedReal acc = integral;
        TrackedReal half = Ms * Lp[l];
        half /= 2;
        acc -= half;

        // Derivatives: f^(d)(x) = x^(-sigma-d) sum_i a[i] log^i x.
        std::vector<Rational> a(l + 1, Rational(0));
        a[l] = 1;
        auto differentiate = [&](int d) {
            // from order d to d + 1
            const Rational t = sigma + d;
            std::vector<Rational> nb(l + 1, Rational(0));
            for (int i = 0; i <= l; ++i) {
                nb[i] = -t * a[i];
                if (i + 1 <= l) nb[i] += Rational(i + 1) * a[i + 1];
            }
            a.swap(nb);
        };
        TrackedReal Mpow = Ms * Minv;  // M^(-sigma-1)
        TrackedReal Minv2 = Minv * Minv;
        int d = 0;
        differentiate(d++);
        double prev = INFINITY;
        bool done = false;
        for (int k = 1; k < 200; ++k) {
            // a holds order 2k-1 coefficients here.
            TrackedReal poly(bits);
            for (int i = 0; i <= l; ++i)
                if (a[i] != 0) poly += Lp[i] * a[i];
            TrackedReal term = poly * Mpow;
            term *= Rational(bernoulli(2 * k) / factorial(2 * k));
            const double m = term.mag();
            if (m < target) {
                acc.add_err(up(2.0 * m));
                done = true;
                break;
            }
            if (m > prev) {
                acc.add_err(up(2.0 * prev));
                done = true;
                break;
            }
            acc -= term;
            prev = m;
            differentiate(d++);
            differentiate(d++);
            Mpow *= Minv2;
        }
        if (!done) throw PrecisionUnachievable("log_power_tail: Euler-Maclaurin did not settle");
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace detail

namespace {

struct Ctx {
    int nv;
    int D;
    long bits;
    TrackedReal zero;
    TrackedReal one;
};

TSeries tconst(const Ctx& c, const TrackedReal& v) { return TSeries::constant(c.nv, c.D, c.zero, v); }

// f(n) for one parameter, as a tracked series.
TSeries factor_at(const Ctx& c, const HyperParam& hp, const TSeries& b_or_e1, const TSeries& e2, long n) {
    if (!hp.pair) {
        TSeries f = b_or_e1;
        f.at(0) += TrackedReal(n - 1, c.bits);
        return f;
    }
    TSeries f = e2;
    TSeries t = b_or_e1;
    t *= Rational(n - 1);
    f += t;
    f.at(0) += TrackedReal((n - 1) * (n - 1), c.bits);
    return f;
}

double max_mag(const TSeries& s) {
    double m = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) m = std::max(m, s.at(i).mag());
    return m;
}

// sum_{X in params} (X - 1)^r for r = 1..R, as tracked series; pairs use
// Newton's identities on the shifted elementary symmetric functions.
std::vector<TSeries> power_sums(const Ctx& c, const std::vector<HyperParam>& ps, const std::vector<TSeries>& t1,
                                const std::vector<TSeries>& t2, int R) {
    std::vector<TSeries> out(R + 1, TSeries(c.nv, c.D, c.zero));
    for (std::size_t j = 0; j < ps.size(); ++j) {
        if (!ps[j].pair) {
            TSeries x = t1[j];
            x.at(0) -= c.one;
            TSeries pw = x;
            for (int r = 1; r <= R; ++r) {
                if (r > 1) pw = pw * x;
                out[r] += pw;
            }
        } else {
            // alpha - 1, beta - 1: sum s1 = e1 - 2, product s2 = e2 - e1 + 1.
            TSeries s1 = t1[j];
            s1.at(0) -= TrackedReal(2L, c.bits);
            TSeries s2 = t2[j] - t1[j];
            s2.at(0) += c.one;
            std::vector<TSeries> pk(R + 1, TSeries(c.nv, c.D, c.zero));
            pk[0] = tconst(c, TrackedReal(2L, c.bits));
            for (int r = 1; r <= R; ++r) {
                pk[r] = s1 * pk[r - 1];
                if (r >= 2) pk[r] -= s2 * pk[r - 2];
                else pk[r] = s1;
                out[r] += pk[r];
            }
        }
    }
    return out;
}

Rational exact_exponent(const std::vector<HyperParam>& up, const std::vector<HyperParam>& lo) {
    Rational g = 0;
    for (const auto& h : up) g += h.pair ? Rational(h.e1.constant_term()) : Rational(h.b.constant_term());
    for (const auto& h : lo) g -= h.pair ? Rational(h.e1.constant_term()) : Rational(h.b.constant_term());
    return g;
}

int weight_of(const std::vector<HyperParam>& ps) {
    int w = 0;
    for (const auto& h : ps) w += h.pair ? 2 : 1;
    return w;
}

}  // namespace

TSeries hyper_series_sum(const HyperSum& hs, const Precision& p) {
    const HyperParam* first = nullptr;
    for (const auto& h : hs.upper) first = &h;
    for (const auto& h : hs.lower) first = &h;
    if (!first) throw UsageError("hyper_series_sum needs at least one parameter");
    const RSeries& proto = first->pair ? first->e1 : first->b;
    Ctx c{proto.nvars(), proto.degree(), p.bits(), TrackedReal(p.bits()), TrackedReal(1L, p.bits())};
    if (hs.rho < 0 || hs.rho > 1) throw DomainError("hypergeometric argument must lie in [0, 1]");

    auto track = [&](const std::vector<HyperParam>& ps, std::vector<TSeries>& t1, std::vector<TSeries>& t2) {
        for (const auto& h : ps) {
            t1.push_back(to_tracked(h.pair ? h.e1 : h.b, c.bits));
            t2.push_back(h.pair ? to_tracked(h.e2, c.bits) : TSeries(c.nv, c.D, c.zero));
        }
    };
    std::vector<TSeries> u1, u2, l1, l2;
    track(hs.upper, u1, u2);
    track(hs.lower, l1, l2);

    // Terminating series: a constant single upper parameter in {0, -1, -2, ...}.
    long stop = -1;
    for (const auto& h : hs.upper) {
        if (h.pair) continue;
        bool constant = true;
        for (std::size_t i = 1; i < h.b.size(); ++i)
            if (h.b.at(i) != 0) constant = false;
        const Rational b0 = h.b.constant_term();
        if (constant && b0.get_den() == 1 && b0 <= 0) {
            long s = -b0.get_num().get_si();
            if (stop < 0 || s < stop) stop = s;
        }
    }
    for (const auto& h : hs.lower) {
        if (h.pair) continue;
        const Rational c0 = h.b.constant_term();
        if (c0.get_den() == 1 && c0 <= 0) throw DomainError("lower parameter is a non-positive integer");
    }

    auto ratio = [&](long n) {
        TSeries num = tconst(c, c.one);
        for (std::size_t j = 0; j < hs.upper.size(); ++j) num = num * factor_at(c, hs.upper[j], u1[j], u2[j], n);
        for (std::size_t j = 0; j < hs.lower.size(); ++j)
            num = num * reciprocal(factor_at(c, hs.lower[j], l1[j], l2[j], n));
        return num;
    };

    TSeries term = tconst(c, c.one);
    TSeries sum = term;
    TrackedReal rho(hs.rho, c.bits);
    const bool unit = hs.rho == 1;

    if (stop >= 0) {
        for (long n = 1; n <= stop; ++n) {
            term = term * ratio(n);
            if (!unit) term.scale(rho);
            sum += term;
        }
        return sum;
    }
    if (hs.rho == 0) return sum;

    const Rational g0 = exact_exponent(hs.upper, hs.lower);
    double pmax = 1.0;
    for (const auto* ps : {&hs.upper, &hs.lower})
        for (const auto& h : *ps) {
            const RSeries& s = h.pair ? h.e1 : h.b;
            pmax = std::max(pmax, std::fabs(s.constant_term().get_d()));
            if (h.pair) pmax = std::max(pmax, std::sqrt(std::fabs(h.e2.constant_term().get_d())));
        }
    const int wu = weight_of(hs.upper), wl = weight_of(hs.lower);
    if (wu > wl) throw DivergenceError("more upper than lower parameters");

    if (!unit) {
        const double rd = hs.rho.get_d();
        std::vector<double> recent;
        for (long n = 1; n <= hs.n_max; ++n) {
            term = term * ratio(n);
            term.scale(rho);
            sum += term;
            recent.push_back(max_mag(term));
            if (recent.size() > 5) recent.erase(recent.begin());
            if (n < 2 * pmax + 10) continue;
            const double slack = wu == wl ? (std::fabs(g0.get_d()) + c.D + 2) / n : 0.0;
            const double rp = rd * (1.0 + slack);
            if (rp >= 1.0) continue;
            const double mx = *std::max_element(recent.begin(), recent.end());
            const double bound = up(4.0 * mx * rp / (1.0 - rp));
            if (bound < p.inner_target() * std::max(1.0, max_mag(sum))) {
                for (std::size_t i = 0; i < sum.size(); ++i) sum.at(i).add_err(bound);
                return sum;
            }
        }
        throw PrecisionUnachievable("hypergeometric series needs more than n_max terms");
    }

    if (wu != wl) throw UsageError("unit argument needs balanced parameters");
    if (g0 >= -1) throw DivergenceError("hypergeometric series diverges at unit argument");

    const long M = std::max<long>(64, static_cast<long>(4 * pmax) + 20);
    const int P = p.digits + 10;
    if (2 * M > hs.n_max) throw PrecisionUnachievable("hypergeometric cutoff exceeds n_max");

    // Asymptotic data, independent of the cutoff.
    std::vector<TSeries> pu = power_sums(c, hs.upper, u1, u2, P + 1);
    std::vector<TSeries> pl = power_sums(c, hs.lower, l1, l2, P + 1);
    std::vector<TSeries> g(P + 2, TSeries(c.nv, c.D, c.zero));
    for (int r = 1; r <= P + 1; ++r) {
        g[r] = pu[r] - pl[r];
        g[r] *= Rational((r & 1) ? 1 : -1, r);
    }
    std::vector<TSeries> d(P + 1, TSeries(c.nv, c.D, c.zero));
    auto add_d = [&](int s, const TSeries& x, const Rational& k) {
        if (s < 1 || s > P || k == 0) return;
        TSeries t = x;
        t *= k;
        d[s] += t;
    };
    add_d(1, g[1], Rational(1, 2));
    for (int k = 1; 2 * k <= P; ++k) add_d(2 * k, g[1], -bernoulli(2 * k) / (2 * k));
    for (int r = 2; r <= P + 1; ++r) {
        add_d(r - 1, g[r], Rational(-1, r - 1));
        add_d(r, g[r], Rational(1, 2));
        Rational rising = r;  // (r)_{2k-1}
        for (int k = 1; r - 1 + 2 * k <= P; ++k) {
            if (k > 1) rising *= Rational((r + 2 * k - 3) * (r + 2 * k - 2));
            add_d(r - 1 + 2 * k, g[r], -bernoulli(2 * k) * rising / factorial(2 * k));
        }
    }
    std::vector<TSeries> f(P + 1, TSeries(c.nv, c.D, c.zero));
    f[0] = tconst(c, c.one);
    for (int s = 1; s <= P; ++s) {
        for (int j = 1; j <= s; ++j) {
            TSeries t = d[j] * f[s - j];
            t *= Rational(j);
            f[s] += t;
        }
        f[s] *= Rational(1, s);
    }
    TSeries gp = g[1];
    gp.at(0) = c.zero;
    // coef[l][s] = gp^l / l! * f_s
    std::vector<std::vector<TSeries>> coef(c.D + 1);
    TSeries gl = tconst(c, c.one);
    for (int l = 0; l <= c.D; ++l) {
        if (l > 0) {
            gl = gl * gp;
            gl *= Rational(1, l);
        }
        for (int s = 0; s <= P; ++s) coef[l].push_back(gl * f[s]);
    }

    auto tail_from = [&](long m, TSeries tm) {
        const int sg = tm.constant_term().sign();
        if (sg == 0) throw PrecisionUnachievable("hypergeometric term vanished at the cutoff");
        if (sg < 0) tm *= Rational(-1);
        TSeries K = log(tm);
        TrackedReal lm = log(TrackedReal(m, c.bits));
        TSeries t = g[1];
        t.scale(lm);
        K -= t;
        TrackedReal mp = TrackedReal(1L, c.bits);
        TrackedReal minv = c.one / TrackedReal(m, c.bits);
        for (int s = 1; s <= P; ++s) {
            mp *= minv;
            TSeries ds = d[s];
            ds.scale(mp);
            K -= ds;
        }
        TSeries acc(c.nv, c.D, c.zero);
        for (int s = 0; s <= P; ++s) {
            std::vector<TrackedReal> z = detail::log_power_tail(Rational(s) - g0, c.D, m, p);
            for (int l = 0; l <= c.D; ++l) {
                TSeries x = coef[l][s];
                x.scale(z[l]);
                acc += x;
            }
        }
        TSeries out = exp(K) * acc;
        if (sg < 0) out *= Rational(-1);
        return out;
    };

    TSeries sum_m(c.nv, c.D, c.zero), term_m(c.nv, c.D, c.zero);
    for (long n = 1; n <= 2 * M; ++n) {
        term = term * ratio(n);
        sum += term;
        if (n == M) {
            sum_m = sum;
            term_m = term;
        }
    }
    TSeries a = sum_m + tail_from(M, term_m);
    TSeries b = sum + tail_from(2 * M, term);
    for (std::size_t i = 0; i < b.size(); ++i) b.at(i).add_err(up(2.0 * mid_diff(a.at(i), b.at(i))));
    return b;
}

}  // namespace mtv
