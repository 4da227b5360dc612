#include "mtv/errors.hpp"
#include "mtv/numerics.hpp"
#include "mtv/tvalues.hpp"
#include "oracle.hpp"

using namespace mtv;

TEST_CASE("constants against mpmath literals") {
    const Precision p(30);
    CHECK_AGREE(constant(Constant::pi, p), oracle::lit(oracle::pi));
    CHECK_AGREE(constant(Constant::log2, p), oracle::lit(oracle::log2));
    CHECK_AGREE(constant(Constant::euler_gamma, p), oracle::lit(oracle::euler_gamma));
    CHECK_AGREE(constant("pi", p), constant(Constant::pi, p));
    CHECK_THROWS_AS(constant("e", p), UsageError);
    CHECK(constant(Constant::pi, p).err() < 1e-30);
}

TEST_CASE("low precision enclosure contains the high precision value") {
    for (Constant c : {Constant::pi, Constant::euler_gamma, Constant::log2}) {
        TrackedReal lo = constant(c, Precision(15));
        TrackedReal hi = constant(c, Precision(40));
        CHECK(oracle::agree(lo, hi));
    }
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(12) == Rational(-691, 2730));
    // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1
    for (int n = 1; n <= 30; ++n) {
        Rational s = 0;
        for (int j = 0; j <= n; ++j) s += binomial(n + 1, j) * bernoulli(j);
        CHECK(s == 0);
    }
}

TEST_CASE("binomial and factorial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("hurwitz zeta") {
    const Precision p(30);
    TrackedReal pi2 = oracle::lit(oracle::pi) * oracle::lit(oracle::pi);
    TrackedReal sixth = pi2;
    sixth /= 6;
    CHECK_AGREE(hurwitz_zeta(2, 1, p), sixth);
    TrackedReal half = pi2;
    half /= 2;
    CHECK_AGREE(hurwitz_zeta(2, Rational(1, 2), p), half);
    for (int s = 2; s <= 8; ++s) CHECK_AGREE(zeta(s, p), oracle::lit(oracle::zeta[s]));
    CHECK_AGREE(hurwitz_zeta(3, Rational(1, 3), p), oracle::lit(oracle::hurwitz3_third));
    CHECK_AGREE(hurwitz_zeta(3, 1, Precision(20)), t_value({1, 1}, {3}, Precision(20)));
    CHECK_THROWS_AS(hurwitz_zeta(1, 1, p), DivergenceError);
    CHECK_THROWS_AS(hurwitz_zeta(2, 0, p), DomainError);
}

TEST_CASE("hurwitz zeta is stable under doubling the shift") {
    const Precision p(30);
    const long M = detail::hurwitz_default_shift(p);
    for (int s : {2, 3, 5, 8})
        for (Rational q : {Rational(1), Rational(1, 3), Rational(5, 2)}) {
            auto a = detail::hurwitz_zeta_shift(s, q, M, p);
            auto b = detail::hurwitz_zeta_shift(s, q, 2 * M, p);
            REQUIRE(a);
            REQUIRE(b);
            CHECK_AGREE(*a, *b);
        }
}

TEST_CASE("digamma") {
    const Precision p(30);
    CHECK_AGREE(digamma(1, p), -oracle::lit(oracle::euler_gamma));
    TrackedReal two_log2 = oracle::lit(oracle::log2);
    two_log2 *= 2L;
    CHECK_AGREE(digamma(Rational(1, 2), p), -oracle::lit(oracle::euler_gamma) - two_log2);
    CHECK_AGREE(digamma(Rational(3, 2), p) - digamma(Rational(1, 2), p), TrackedReal(2L, p.bits()));
    CHECK_AGREE(digamma(Rational(1), p), -constant(Constant::euler_gamma, p));
}

TEST_CASE("log gamma") {
    const Precision p(30);
    CHECK_AGREE(log_gamma(1, p), TrackedReal(p.bits()));
    CHECK_AGREE(log_gamma(Rational(1, 2), p), oracle::lit(oracle::half_log_pi));
    CHECK_AGREE(log_gamma(Rational(5, 2), p) - log_gamma(Rational(3, 2), p), oracle::lit(oracle::log_3_2));
}

TEST_CASE("digamma is the derivative of log gamma") {
    const Precision p(40);
    const Rational h(1, 1000000);
    for (Rational q : {Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1), Rational(3, 2)}) {
        TrackedReal d = log_gamma(q + h, p) - log_gamma(q - h, p);
        d *= Rational(1) / (2 * h);
        // |psi''(x)| <= 2/x^3 + 2.5 near these points; central difference error <= h^2/6 max|psi''|
        const double x = Rational(q - h).get_d();
        const double bound = h.get_d() * h.get_d() / 6 * (2 / (x * x * x) + 2.5);
        CHECK_AGREE_TOL(d, digamma(q, p), bound);
    }
}

TEST_CASE("gamma expansion through depth-one t-values") {
    // log Gamma((a-z)/N) - log Gamma(a/N) + (z/N) psi(a/N) = sum_{n>=2} t_{N,a}(n) z^n / n
    const Precision p(30);
    const Rational z(1, 10);
    for (auto [N, a] : {std::pair{2L, 1L}, {3L, 1L}, {3L, 2L}}) {
        TrackedReal lhs = log_gamma((Rational(a) - z) / N, p) - log_gamma(Rational(a, N), p);
        TrackedReal psi = digamma(Rational(a, N), p);
        psi *= z / N;
        lhs += psi;
        TrackedReal rhs(p.bits());
        Rational zn = z;
        for (int n = 2; n <= 30; ++n) {
            zn *= z;
            TrackedReal term = single_t({N, a}, n, p);
            term *= zn / n;
            rhs += term;
        }
        // t_{N,a}(n) <= 2 for a >= 1, so the omitted tail is below 2 * 10^-31 / 0.9
        CHECK_AGREE_TOL(lhs, rhs, 3e-31);
    }
}
