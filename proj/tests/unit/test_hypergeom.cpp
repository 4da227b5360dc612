#include "mtv/errors.hpp"
#include "mtv/hypergeom.hpp"
#include "mtv/numerics.hpp"
#include "oracle.hpp"

using namespace mtv;

namespace {

const Precision P30(30);

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// Gamma(x) for x > 0
TrackedReal gamma_fn(const Rational& x) { return exp(log_gamma(x, P30)); }

TrackedReal pfq(std::vector<Rational> up, std::vector<Rational> lo, Rational z = 1) {
    return pfq_value({std::move(up), std::move(lo), std::move(z)}, P30);
}

Rational random_rational(std::mt19937& rng, int lo, int hi, int den) {
    std::uniform_int_distribution<int> num(lo * den, hi * den);
    return q(num(rng), den);
}

}  // namespace

TEST_CASE("pochhammer") {
    CHECK(pochhammer(q(7, 3), 0) == 1);
    CHECK(pochhammer(1, 5) == 120);
    CHECK(pochhammer(q(1, 2), 3) == q(15, 8));
    // (a/N)_i / ((a+N)/N)_i = a / (a + N i) at (N, a, i) = (3, 2, 4)
    CHECK(pochhammer(q(2, 3), 4) / pochhammer(q(5, 3), 4) == q(1, 7));
}

TEST_CASE("pfq special cases") {
    CHECK_AGREE(pfq({0, q(1, 2), 3}, {q(5, 2), 7}), TrackedReal(1L, P30.bits()));
    CHECK_AGREE(pfq({1, 1}, {3}), TrackedReal(2L, P30.bits()));
    CHECK_AGREE(gauss_2f1_at_1(1, 1, 3, P30), TrackedReal(2L, P30.bits()));
    CHECK_AGREE(gauss_2f1_at_1(q(3, 7), 0, q(5, 2), P30), TrackedReal(1L, P30.bits()));
    CHECK_AGREE(gauss_2f1_at_1(q(1, 2), q(1, 2), 2, P30), pfq({q(1, 2), q(1, 2)}, {2}));
    // terminating: 2F1(-2, 1; 1; 1) = (1 - 1)^2 = 0
    CHECK_AGREE(pfq({-2, 1}, {1}), TrackedReal(P30.bits()));
    // 1F0(1;;1/2) = 2
    CHECK_AGREE(pfq({1}, {}, q(1, 2)), TrackedReal(2L, P30.bits()));
    CHECK_AGREE(pfq({q(1, 2), q(1, 2), 1}, {q(3, 2), q(3, 2)}), oracle::lit(oracle::pi2_over_8));
}

TEST_CASE("pfq domain errors") {
    CHECK_THROWS_AS(pfq({1, 1}, {}), UsageError);
    CHECK_THROWS_AS(pfq({1, 1}, {-1}), DomainError);
    CHECK_THROWS_AS(pfq({1, 1}, {3}, q(3, 2)), DomainError);
    CHECK_THROWS_AS(pfq({1, 1}, {2}), DivergenceError);
    CHECK_THROWS_AS(gauss_2f1_at_1(1, 1, 2, P30), DivergenceError);
}

TEST_CASE("pfq agrees with the Gauss product formula") {
    std::mt19937 rng(2024);
    int done = 0;
    for (Rational excess : {q(1, 2), q(1), q(3, 2)})
        for (int i = 0; i < 7 && done < 20; ++i, ++done) {
            Rational a = random_rational(rng, 0, 3, 4), b = random_rational(rng, 0, 3, 3);
            if (a == 0) a = q(1, 4);
            if (b == 0) b = q(1, 3);
            const Rational c = a + b + excess;
            INFO("a=" << a << " b=" << b << " c=" << c);
            CHECK_AGREE(pfq({a, b}, {c}), gauss_2f1_at_1(a, b, c, P30));
        }
    CHECK(done == 20);
}

TEST_CASE("3F2 transformation") {
    // 3F2(a,b,c;d,e;1) = G(d)G(d+e-a-b-c)/(G(d-c)G(d+e-a-b)) 3F2(e-a,e-b,c;e,d+e-a-b;1)
    std::mt19937 rng(7);
    int done = 0;
    while (done < 10) {
        const Rational a = random_rational(rng, 0, 2, 3), b = random_rational(rng, 0, 2, 4),
                       c = random_rational(rng, 0, 2, 5);
        const Rational d = c + random_rational(rng, 0, 2, 2) + q(1, 3);
        const Rational e = a + b + c - d + q(1, 2) + random_rational(rng, 0, 2, 3);
        if (a <= 0 || b <= 0 || c <= 0 || e <= 0 || e - a <= 0 || e - b <= 0) continue;
        ++done;
        TrackedReal lhs = pfq({a, b, c}, {d, e});
        TrackedReal rhs = pfq({e - a, e - b, c}, {e, d + e - a - b});
        rhs *= gamma_fn(d) * gamma_fn(d + e - a - b - c) / (gamma_fn(d - c) * gamma_fn(d + e - a - b));
        INFO("a=" << a << " b=" << b << " c=" << c << " d=" << d << " e=" << e);
        CHECK_AGREE(lhs, rhs);
    }
}

TEST_CASE("3F2 summation with a unit upper parameter") {
    // 3F2(a,b,1;c,2+a+b-c;1) = (1+a+b-c)/((1+a-c)(1+b-c)) (1 - c + G(c)G(1+a+b-c)/(G(a)G(b)))
    for (Rational a : {q(1, 3), q(1, 2), q(5, 4)})
        for (Rational b : {q(2, 5), q(3, 2)})
            for (Rational c : {q(1, 4), q(2, 3)}) {
                if (1 + a + b - c <= 0 || 1 + a - c == 0 || 1 + b - c == 0) continue;
                TrackedReal lhs = pfq({a, b, 1}, {c, 2 + a + b - c});
                TrackedReal g = gamma_fn(c) * gamma_fn(1 + a + b - c) / (gamma_fn(a) * gamma_fn(b));
                TrackedReal rhs = TrackedReal(Rational(1 - c), P30.bits()) + g;
                rhs *= Rational((1 + a + b - c) / ((1 + a - c) * (1 + b - c)));
                INFO("a=" << a << " b=" << b << " c=" << c);
                CHECK_AGREE(lhs, rhs);
            }
}

TEST_CASE("well-poised 3F2 summation at the weighted-sum parameters") {
    // 3F2(1, 1/2, c; 3/2, 2-c; 1) = sqrt(pi)/2 G(3/2)G(2-c)G(1-c) / (G(3/2-c)^2)
    const TrackedReal sqrt_pi = sqrt(constant(Constant::pi, P30));
    for (long a : {1L, 2L})
        for (Rational u : {q(0), q(1, 10), q(1, 5)}) {
            const Rational c = (a + u) / (2 * a);
            TrackedReal lhs = pfq({1, q(1, 2), c}, {q(3, 2), 2 - c});
            TrackedReal rhs = sqrt_pi * gamma_fn(q(3, 2)) * gamma_fn(2 - c) * gamma_fn(1 - c);
            rhs /= gamma_fn(q(3, 2) - c) * gamma_fn(q(3, 2) - c);
            rhs /= 2;
            INFO("a=" << a << " u=" << u);
            CHECK_AGREE(lhs, rhs);
        }
}

TEST_CASE("Taylor coefficients of x/(a-x) 3F2 by divided differences") {
    // (p, q, s) = (1/2, 1/3, 5/4), (N, a) = (2, 1)
    const Rational p = q(1, 2), qq = q(1, 3), s = q(5, 4);
    const long N = 2, a = 1;
    const Rational h(1, 100);
    auto f = [&](const Rational& x) {
        TrackedReal v = pfq({p, qq, (a - x) / N}, {s, (a + N - x) / N});
        v *= Rational(x / (a - x));
        return v;
    };
    std::vector<TrackedReal> fx;
    for (int j = -2; j <= 2; ++j) fx.push_back(f(j * h));
    // five-point stencils
    TrackedReal d1 = fx[0] - fx[1] * 8L + fx[3] * 8L - fx[4];
    d1 *= Rational(1) / (12 * h);
    TrackedReal d2 = -fx[0] + fx[1] * 16L - fx[2] * 30L + fx[3] * 16L - fx[4];
    d2 *= Rational(1) / (24 * h * h);

    TrackedReal t1 = pfq({p, qq, q(a, N)}, {s, q(a + N, N)});
    TrackedReal t2 = pfq({p, qq, q(a, N), q(a, N)}, {s, q(a + N, N), q(a + N, N)});
    // stencil errors are O(h^4) with O(1) derivatives
    CHECK_AGREE_TOL(d1, t1, 1e-6);
    CHECK_AGREE_TOL(d2, t2, 1e-6);
}

TEST_CASE("hypergeometric series with a variable parameter") {
    // sum_n (1)_n (1)_n / ((2)_n (2+u)_n) = zeta(2) + (zeta(2) - 2 zeta(3)) u + O(u^2)
    using RS = Series<Rational>;
    const int D = 2;
    auto cst = [&](Rational v) { return RS::constant(1, D, Rational(0), v); };
    RS u = RS::variable(1, D, Rational(0), Rational(1), 0);
    HyperSum hs;
    hs.upper = {HyperParam::single(cst(1)), HyperParam::single(cst(1))};
    hs.lower = {HyperParam::single(cst(2)), HyperParam::single(cst(2) + u)};
    Series<TrackedReal> r = hyper_series_sum(hs, P30);
    CHECK_AGREE(r.coeff({0}), oracle::lit(oracle::zeta[2]));
    TrackedReal c1 = oracle::lit(oracle::zeta[2]) - oracle::lit(oracle::zeta[3]) * 2L;
    CHECK_AGREE(r.coeff({1}), c1);

    // the symmetric pair form of (1/2)_n^2 matches two single parameters
    HyperSum pair, single;
    pair.upper = {HyperParam::symmetric(cst(1), cst(q(1, 4)))};
    pair.lower = {HyperParam::symmetric(cst(3), cst(q(9, 4)))};
    single.upper = {HyperParam::single(cst(q(1, 2))), HyperParam::single(cst(q(1, 2)))};
    single.lower = {HyperParam::single(cst(q(3, 2))), HyperParam::single(cst(q(3, 2)))};
    for (Rational rho : {q(1), q(1, 2)}) {
        pair.rho = single.rho = rho;
        CHECK_AGREE(hyper_series_sum(pair, P30).coeff({0}), hyper_series_sum(single, P30).coeff({0}));
    }
    pair.rho = 1;
    CHECK_AGREE(hyper_series_sum(pair, P30).coeff({0}), oracle::lit(oracle::pi2_over_8));
}
