#include "mtv/evaluations.hpp"

#include "mtv/errors.hpp"
#include "mtv/genfun.hpp"
#include "mtv/hypergeom.hpp"
#include "mtv/numerics.hpp"
#include "mtv/parallel.hpp"

namespace mtv {

namespace {

const LevelParams kLevel2{2, 1};

void check_ab(const EvalParams& ep) {
    if (ep.a < 0 || ep.b < 0) throw UsageError("evaluation needs a, b >= 0");
    if (ep.a + ep.b > kMaxEvalWeightParam) throw UsageError("evaluation needs a + b <= 5");
}

Rational pow2_neg(int k) { return Rational(1, 1) / Rational(Integer(1) << k); }

Index twos(int m) { return Index(static_cast<std::size_t>(m), 2); }

// t({2}^m) or t*({2}^m) for m = 0..mmax (m = 0 gives 1).
std::vector<TrackedReal> twos_values(int mmax, bool star, const Precision& p) {
    std::vector<TValueRequest> reqs;
    for (int m = 1; m <= mmax; ++m) reqs.push_back({kLevel2, twos(m), star});
    std::vector<TrackedReal> v = t_values_batch(reqs, p);
    v.insert(v.begin(), TrackedReal(1L, p.bits()));
    return v;
}

// The zeta(2r+1) sums shared by the four evaluations. `odd` selects the
// 2a+1 / 2b+1 binomials (weight-3 middle) versus 2a / 2b (weight-1 middle).
TrackedReal zeta_sum(const EvalParams& ep, bool star, bool odd) {
    const int rmax = ep.a + ep.b + (odd ? 1 : 0);
    const std::vector<TrackedReal> tw = twos_values(rmax, star, ep.p);
    TrackedReal s(ep.p.bits());
    for (int r = 1; r <= rmax; ++r) {
        const Rational q = pow2_neg(2 * r);
        Rational c;
        if (odd)
            c = q * ((1 - q) * binomial(2 * r, 2 * ep.a + 1) + binomial(2 * r, 2 * ep.b + 1));
        else
            c = q * (binomial(2 * r, 2 * ep.a) + (1 - q) * binomial(2 * r, 2 * ep.b));
        if (c == 0) continue;
        // Non-star signs: (-1)^(r-1) for the weight-3 middle, (-1)^r otherwise.
        if (!star && ((odd ? r - 1 : r) % 2)) c = -c;
        TrackedReal term = tw[static_cast<std::size_t>(rmax - r)] * zeta(2 * r + 1, ep.p);
        term *= c;
        s += term;
    }
    return s;
}

TrackedReal delta_terms(const EvalParams& ep, bool star) {
    const std::vector<TrackedReal> tw = twos_values(std::max(ep.a, ep.b), star, ep.p);
    const TrackedReal log2 = constant(Constant::log2, ep.p);
    TrackedReal s(ep.p.bits());
    if (ep.a == 0) s += (TrackedReal(ep.V, ep.p.bits()) - log2) * tw[static_cast<std::size_t>(ep.b)];
    if (ep.b == 0) s += log2 * tw[static_cast<std::size_t>(ep.a)];
    return s;
}

TSeries tzero(int D, const Precision& p) { return TSeries(2, D, TrackedReal(p.bits())); }

// 1/cos(pi x_var) from the reciprocal of the cosine series.
TSeries sec_pi(int var, int D, const Precision& p) {
    TSeries c = tzero(D, p);
    const TrackedReal pi = constant(Constant::pi, p);
    TrackedReal pw(1L, p.bits());
    for (int n = 0; 2 * n <= D; ++n) {
        Exponent e(2, 0);
        e[static_cast<std::size_t>(var)] = 2 * n;
        TrackedReal v = pw;
        v *= Rational(1) / factorial(2 * n);
        if (n % 2) v = -v;
        c.set(e, v);
        pw *= pi;
        pw *= pi;
    }
    return reciprocal(c);
}

TSeries divide_xy(const TSeries& f, int D, const Precision& p) {
    TSeries r = tzero(D, p);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Exponent& e = f.exponent(i);
        if (e[0] == 0 || e[1] == 0) {
            if (f.at(i).abs_lower() > 0) throw DomainError("series is not divisible by xy");
            continue;
        }
        if (e[0] + e[1] - 2 <= D) r.set({e[0] - 1, e[1] - 1}, f.at(i));
    }
    return r;
}

// F(x + y) - F(x - y) for F(t) = sum_r c_r zeta(2r+1) t^(2r).
TSeries odd_difference(bool weighted, int E, const Precision& p) {
    TSeries f = tzero(E, p);
    for (int r = 1; 2 * r <= E; ++r) {
        TrackedReal c = zeta(2 * r + 1, p);
        if (weighted) c *= Rational(1) - pow2_neg(2 * r);
        f.set({2 * r, 0}, c);
    }
    const Rational one(1), zero(0);
    return substitute_linear(f, {{one, one}, {zero, zero}}, 2, E) -
           substitute_linear(f, {{one, -one}, {zero, zero}}, 2, E);
}

}  // namespace

TrackedReal t_from_zeta(int n, const Precision& p) {
    if (n < 2) throw DivergenceError("t(n) needs n >= 2");
    TrackedReal z = zeta(n, p);
    z *= Rational(1) - pow2_neg(n);
    return z;
}

TrackedReal thm41_rhs(const EvalParams& ep) {
    check_ab(ep);
    return zeta_sum(ep, true, true);
}

TrackedReal murakami_rhs(const EvalParams& ep) {
    check_ab(ep);
    return zeta_sum(ep, false, true);
}

TrackedReal thm42_rhs(const EvalParams& ep) {
    check_ab(ep);
    return zeta_sum(ep, true, false) + delta_terms(ep, true);
}

TrackedReal charlton_rhs(const EvalParams& ep) {
    check_ab(ep);
    return zeta_sum(ep, false, false) + delta_terms(ep, false);
}

Integer secant_number(int n) {
    if (n < 0 || n > 12) throw UsageError("secant number index must be in [0, 12]");
    // Seidel-Entringer triangle; row 2n ends in the zigzag number A_{2n}.
    const int m = 2 * n;
    std::vector<Integer> row{1};
    for (int i = 1; i <= m; ++i) {
        std::vector<Integer> next(static_cast<std::size_t>(i + 1));
        next[0] = 0;
        for (int k = 1; k <= i; ++k) next[static_cast<std::size_t>(k)] =
            next[static_cast<std::size_t>(k - 1)] + row[static_cast<std::size_t>(i - k)];
        row.swap(next);
    }
    return row.back();
}

TrackedReal sec_genfun(int n, const Precision& p) {
    TrackedReal pi = constant(Constant::pi, p);
    TrackedReal r = pow_int(pi, 2 * n);
    r *= Rational(secant_number(n)) / (factorial(2 * n) * Rational(Integer(1) << (2 * n)));
    return r;
}

std::vector<CoeffCheck> g_star_identity_check(int D, const Precision& p) {
    if (D < 0 || D > 8 || D % 2) throw UsageError("gstar check needs even D <= 8");
    std::vector<CoeffCheck> out;
    std::vector<TValueRequest> reqs;
    for (int a = 0; 2 * a <= D; ++a)
        for (int b = 0; 2 * (a + b) <= D; ++b) {
            Index k = twos(a);
            k.push_back(3);
            for (int i = 0; i < b; ++i) k.push_back(2);
            reqs.push_back({kLevel2, k, true});
            out.push_back({a, b, TrackedReal(), TrackedReal()});
        }
    std::vector<TrackedReal> lhs = t_values_batch(reqs, p);

    TSeries ra = divide_xy(odd_difference(false, D + 2, p), D, p) * sec_pi(0, D, p);
    TSeries rb = divide_xy(odd_difference(true, D + 2, p), D, p) * sec_pi(1, D, p);
    TSeries rhs = ra + rb;
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto& c = out[i];
        c.lhs = lhs[i] * Rational(Integer(1) << (2 * (c.a + c.b) + 3));
        c.rhs = rhs.coeff({2 * c.a, 2 * c.b});
    }
    return out;
}

std::vector<CoeffCheck> ti_4f3_check(const Rational& z, int D, const Precision& p) {
    if (D < 0 || D > 4 || D % 2) throw UsageError("ti4f3 check needs even D <= 4");
    if (z < 0 || z >= 1) throw DomainError("ti4f3 check needs 0 <= z < 1");
    if (z > Rational(3, 4)) throw PrecisionUnachievable("ti4f3 check needs z <= 3/4");
    std::vector<CoeffCheck> out;
    for (int a = 0; 2 * a <= D; ++a)
        for (int b = 0; 2 * (a + b) <= D; ++b) {
            Index s = twos(a);
            std::vector<Rational> zs(static_cast<std::size_t>(a), Rational(1));
            s.push_back(1);
            zs.push_back(z);
            for (int i = 0; i < b; ++i) {
                s.push_back(2);
                zs.push_back(1);
            }
            TrackedReal l = z == 0 ? TrackedReal(p.bits()) : ti_star(s, zs, p);
            l *= Rational(Integer(1) << (2 * (a + b)));
            out.push_back({a, b, l, TrackedReal()});
        }
    if (z == 0) {
        for (auto& c : out) c.rhs = TrackedReal(p.bits());
        return out;
    }

    // (1)_n / n! cancels; the remaining ratio per step is
    //   (3/2)_n (1/2-x)_n (1/2+x)_n / ((1/2)_n (3/2-y)_n (3/2+y)_n).
    using RS = Series<Rational>;
    auto cst = [&](const Rational& q) { return RS::constant(2, D, Rational(0), q); };
    RS x2(2, D, Rational(0)), y2(2, D, Rational(0));
    if (D >= 2) {
        x2.set({2, 0}, Rational(1));
        y2.set({0, 2}, Rational(1));
    }
    HyperSum hs;
    hs.upper.push_back(HyperParam::single(cst(Rational(3, 2))));
    hs.upper.push_back(HyperParam::symmetric(cst(Rational(1)), cst(Rational(1, 4)) - x2));
    hs.lower.push_back(HyperParam::single(cst(Rational(1, 2))));
    hs.lower.push_back(HyperParam::symmetric(cst(Rational(3)), cst(Rational(9, 4)) - y2));
    hs.rho = z * z;
    TSeries f = hyper_series_sum(hs, p);

    TSeries geo = tzero(D, p);  // 1/(1 - 4y^2)
    for (int k = 0; 2 * k <= D; ++k) geo.set({0, 2 * k}, TrackedReal(Rational(Integer(1) << (2 * k)), p.bits()));
    TSeries rhs = f * geo * sec_pi(0, D, p);
    rhs *= z;
    for (auto& c : out) c.rhs = rhs.coeff({2 * c.a, 2 * c.b});
    return out;
}

}  // namespace mtv
