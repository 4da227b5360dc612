#include "mtv/errors.hpp"
#include "mtv/hypergeom.hpp"
#include "mtv/numerics.hpp"
#include "mtv/powerseries.hpp"
#include "oracle.hpp"

using namespace mtv;
using RS = Series<Rational>;

namespace {

RS one(int n, int D) { return RS::constant(n, D, Rational(0), Rational(1)); }
RS var(int n, int D, int i) { return RS::variable(n, D, Rational(0), Rational(1), i); }

// Sparse random series with small rational coefficients.
RS random_series(std::mt19937& rng, int n, int D, bool unit_constant) {
    RS s(n, D, Rational(0));
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), coin(0, 2);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (coin(rng) == 0) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            s.at(i) = q;
        }
    if (unit_constant) s.at(0) = 1;
    return s;
}

}  // namespace

TEST_CASE("coefficient access") {
    RS g = reciprocal(one(1, 8) - var(1, 8, 0));
    CHECK(g.coeff({5}) == 1);
    CHECK(g.coeff({8}) == 1);
    RS f = one(1, 4) + var(1, 4, 0);
    CHECK(f.coeff({0}) == 1);
    RS m = var(3, 4, 0) * var(3, 4, 1);
    CHECK(m.coeff({1, 1, 0}) == 1);
    CHECK(m.coeff({1, 0, 0}) == 0);
    CHECK(m.coeff({9, 0, 0}) == 0);
    CHECK_THROWS_AS(m.set({5, 0, 0}, Rational(1)), UsageError);
}

TEST_CASE("geometric series and exp/log inverse pair") {
    const int D = 8;
    RS g = reciprocal(one(1, D) - var(1, D, 0));
    for (int n = 0; n <= D; ++n) CHECK(g.coeff({n}) == 1);
    RS u = var(1, D, 0);
    RS e = exp(log(one(1, D) + u));
    CHECK(e == one(1, D) + u);
    CHECK_THROWS_AS(reciprocal(u), DomainError);
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 10; ++trial) {
        RS a = random_series(rng, 3, 6, false);
        RS b = random_series(rng, 3, 6, false);
        RS c = random_series(rng, 3, 6, false);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b - b == a);
    }
}

TEST_CASE("reciprocal is a two-sided inverse") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        RS s = random_series(rng, 2, 6, true);
        CHECK(s * reciprocal(s) == one(2, 6));
    }
}

TEST_CASE("truncation drops high degrees") {
    RS u = var(2, 3, 0), v = var(2, 3, 1);
    RS p = u * u * v * v;  // degree 4 > 3
    CHECK(p == RS(2, 3, Rational(0)));
}

TEST_CASE("pochhammer_sym") {
    const int D = 3;
    RS e1 = var(2, D, 0), e2 = var(2, D, 1);
    CHECK(pochhammer_sym(0, e1, e2, Rational(1)) == one(2, D));
    CHECK(pochhammer_sym(1, e1, e2, Rational(1)) == e2);
    CHECK(pochhammer_sym(2, e1, e2, Rational(1)) == e2 * (e2 + e1 + one(2, D)));

    // alpha, beta rational: constant series e1 = alpha + beta, e2 = alpha beta
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    for (int trial = 0; trial < 10; ++trial) {
        Rational al(num(rng), den(rng)), be(num(rng), den(rng));
        al.canonicalize();
        be.canonicalize();
        RS c1 = RS::constant(1, 2, Rational(0), Rational(al + be));
        RS c2 = RS::constant(1, 2, Rational(0), Rational(al * be));
        for (int n = 0; n <= 6; ++n) {
            RS r = pochhammer_sym(n, c1, c2, Rational(1));
            CHECK(r.coeff({0}) == pochhammer(al, n) * pochhammer(be, n));
        }
    }
}

TEST_CASE("linear substitution") {
    // f(x) = 1/(1-x), x = u + v
    RS f = reciprocal(one(1, 4) - var(1, 4, 0));
    RS g = substitute_linear(f, {{Rational(1), Rational(1)}}, 2, 4);
    RS s = var(2, 4, 0) + var(2, 4, 1);
    CHECK(g == reciprocal(one(2, 4) - s));
}

TEST_CASE("exp of the zeta series reproduces Gamma(1 - z)") {
    const Precision p(30);
    const int D = 6;
    using TS = Series<TrackedReal>;
    TS f(1, D, TrackedReal(p.bits()));
    f.set({1}, constant(Constant::euler_gamma, p));
    for (int n = 2; n <= D; ++n) {
        TrackedReal c = zeta(n, p);
        c *= Rational(1, n);
        f.set({n}, c);
    }
    TS g = exp(f);
    // Six nodes; the omitted tail of the degree-6 polynomial is below 2 |z|^7.
    for (Rational z : {Rational(1, 100), Rational(-1, 100), Rational(1, 200), Rational(-1, 200), Rational(1, 300),
                       Rational(-1, 300)}) {
        TrackedReal poly(p.bits());
        Rational zn = 1;
        for (int n = 0; n <= D; ++n) {
            TrackedReal t = g.coeff({n});
            t *= zn;
            poly += t;
            zn *= z;
        }
        TrackedReal gamma = exp(log_gamma(1 - z, p));
        const double tail = 2 * std::pow(std::abs(z.get_d()), 7);
        CHECK_AGREE_TOL(poly, gamma, tail);
    }
}
