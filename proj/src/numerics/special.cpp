#include "mtv/errors.hpp"
#include "mtv/numerics.hpp"

#include <cmath>
#include <optional>

namespace mtv {

namespace {

// Shift so that the asymptotic expansions converge well past the target.
long shift_for(const Precision& p) { return std::max(12L, static_cast<long>(p.digits) + 8); }

// Runs an asymptotic series sum_{r>=1} coef(r) * x^{-(base + 2r)} until the
// terms drop below `target`. Returns false if the terms stop decreasing
// first. The remainder is charged as twice the first omitted term.
template <class Coef>
bool asymptotic_tail(const TrackedReal& xinv, long base, Coef coef, double target, TrackedReal& acc) {
    const long bits = acc.bits();
    TrackedReal xinv2 = xinv * xinv;
    TrackedReal pw = pow_int(xinv, base);
    double prev = INFINITY;
    for (int r = 1; r < 4000; ++r) {
        pw *= xinv2;
        TrackedReal term = pw;
        term *= coef(r);
        double m = term.mag();
        if (m > prev) return false;
        if (m < target) {
            acc.add_err(up(2.0 * m));
            return true;
        }
        acc += term;
        prev = m;
        (void)bits;
    }
    return false;
}

}  // namespace

namespace detail {

std::optional<TrackedReal> hurwitz_zeta_shift(int s, const Rational& q, long M, const Precision& p) {
    const long bits = p.bits();
    TrackedReal acc(bits);
    for (long j = 0; j < M; ++j) {
        TrackedReal y(Rational(q + j), bits);
        acc += pow_int(y, -s);
    }
    Rational x = q + M;
    TrackedReal X(x, bits);
    TrackedReal xinv = TrackedReal(1L, bits) / X;
    TrackedReal lead = pow_int(xinv, s - 1);
    lead /= (s - 1);
    acc += lead;
    TrackedReal half = pow_int(xinv, s);
    half /= 2;
    acc += half;
    // B_{2r}/(2r)! * (s)_{2r-1} * x^{1-s-2r}
    auto coef = [s](int r) {
        Integer poch = 1;
        for (int i = 0; i < 2 * r - 1; ++i) poch *= (s + i);
        return Rational(bernoulli(2 * r) * Rational(poch) / factorial(2 * r));
    };
    if (!asymptotic_tail(xinv, s - 1, coef, p.inner_target(), acc)) return std::nullopt;
    return acc;
}

long hurwitz_default_shift(const Precision& p) { return shift_for(p); }

}  // namespace detail

TrackedReal hurwitz_zeta(int s, const Rational& q, const Precision& p) {
    if (s < 2) throw DivergenceError("hurwitz_zeta needs s >= 2");
    if (q <= 0) throw DomainError("hurwitz_zeta needs q > 0");
    for (long M = shift_for(p); M < (1L << 20); M *= 2) {
        if (auto acc = detail::hurwitz_zeta_shift(s, q, M, p)) {
            enforce(*acc, p);
            return *acc;
        }
    }
    throw PrecisionUnachievable("hurwitz_zeta: asymptotic series did not converge");
}

TrackedReal zeta(int s, const Precision& p) { return hurwitz_zeta(s, Rational(1), p); }

TrackedReal digamma(const Rational& q, const Precision& p) {
    if (q <= 0) throw DomainError("digamma needs a positive argument");
    const long bits = p.bits();
    const double target = p.inner_target();
    for (long M = shift_for(p); M < (1L << 20); M *= 2) {
        Rational harm = 0;
        for (long j = 0; j < M; ++j) harm += Rational(1) / Rational(q + j);
        Rational x = q + M;
        TrackedReal X(x, bits);
        TrackedReal xinv = TrackedReal(1L, bits) / X;
        TrackedReal acc = log(X);
        TrackedReal h = xinv;
        h /= 2;
        acc -= h;
        acc -= TrackedReal(harm, bits);
        // - B_{2r} / (2r x^{2r})
        auto coef = [](int r) { return Rational(-bernoulli(2 * r) / Rational(2 * r)); };
        if (asymptotic_tail(xinv, 0, coef, target, acc)) {
            enforce(acc, p);
            return acc;
        }
    }
    throw PrecisionUnachievable("digamma: asymptotic series did not converge");
}

TrackedReal log_gamma(const Rational& q, const Precision& p) {
    if (q <= 0) throw DomainError("log_gamma needs a positive argument");
    const long bits = p.bits();
    const double target = p.inner_target();
    for (long M = shift_for(p); M < (1L << 20); M *= 2) {
        Rational prod = 1;
        for (long j = 0; j < M; ++j) prod *= Rational(q + j);
        Rational x = q + M;
        TrackedReal X(x, bits);
        TrackedReal xinv = TrackedReal(1L, bits) / X;
        TrackedReal lx = log(X);
        TrackedReal acc = lx * Rational(x - Rational(1, 2));
        acc -= X;
        TrackedReal two_pi = constant(Constant::pi, p) * 2L;
        TrackedReal hl = log(two_pi);
        hl /= 2;
        acc += hl;
        acc -= log(TrackedReal(prod, bits));
        // B_{2r} / (2r (2r-1) x^{2r-1})
        acc += xinv * Rational(bernoulli(2) / 2);
        auto coef = [](int r) {
            const int k = r + 1;
            return Rational(bernoulli(2 * k) / Rational(2 * k * (2 * k - 1)));
        };
        if (asymptotic_tail(xinv, 1, coef, target, acc)) {
            enforce(acc, p);
            return acc;
        }
    }
    throw PrecisionUnachievable("log_gamma: asymptotic series did not converge");
}

}  // namespace mtv
