#include "mtv/errors.hpp"
#include "mtv/hypergeom.hpp"
#include "mtv/numerics.hpp"

namespace mtv {

namespace {

bool nonpositive_integer(const Rational& q) { return q.get_den() == 1 && q <= 0; }

// log|Gamma(q)| and sign(Gamma(q)) for rational q not in {0, -1, ...}.
TrackedReal log_abs_gamma(const Rational& q, int& sign, const Precision& p) {
    sign = 1;
    if (q > 0) return log_gamma(q, p);
    // Gamma(q) = Gamma(q + k) / (q (q+1) ... (q+k-1))
    long k = 0;
    Rational prod = 1;
    Rational x = q;
    while (x <= 0) {
        prod *= x;
        x += 1;
        ++k;
    }
    if (prod < 0) sign = -1;
    TrackedReal r = log_gamma(x, p);
    r -= log(TrackedReal(Rational(abs(prod)), p.bits()));
    return r;
}

}  // namespace

Rational pochhammer(const Rational& b, long n) {
    if (n < 0) throw UsageError("pochhammer needs n >= 0");
    Rational r = 1;
    for (long j = 0; j < n; ++j) r *= b + j;
    return r;
}

TrackedReal pfq_value(const PFQParams& params, const Precision& prec) {
    if (params.uppers.size() != params.lowers.size() + 1)
        throw UsageError("pFq needs one more upper than lower parameter");
    for (const auto& c : params.lowers)
        if (nonpositive_integer(c)) throw DomainError("lower parameter is a non-positive integer");
    if (params.z < 0 || params.z > 1) throw DomainError("pFq argument must lie in [0, 1]");
    const long bits = prec.bits();
    if (params.z == 0) return TrackedReal(1L, bits);

    // Exact finite sum when some upper parameter is 0, -1, -2, ...
    long stop = -1;
    for (const auto& b : params.uppers)
        if (nonpositive_integer(b)) {
            long s = -b.get_num().get_si();
            if (stop < 0 || s < stop) stop = s;
        }
    if (stop >= 0) {
        Rational term = 1, sum = 1;
        for (long n = 1; n <= stop; ++n) {
            for (const auto& b : params.uppers) term *= b + (n - 1);
            for (const auto& c : params.lowers) term /= c + (n - 1);
            term *= params.z;
            term /= n;
            sum += term;
        }
        return TrackedReal(sum, bits);
    }

    if (params.z == 1) {
        Rational excess = 0;
        for (const auto& c : params.lowers) excess += c;
        for (const auto& b : params.uppers) excess -= b;
        if (excess <= 0) throw DivergenceError("pFq diverges at z = 1");
    }

    HyperSum hs;
    auto one_var = [](const Rational& q) {
        return HyperParam::single(Series<Rational>::constant(0, 0, Rational(0), q));
    };
    for (const auto& b : params.uppers) hs.upper.push_back(one_var(b));
    for (const auto& c : params.lowers) hs.lower.push_back(one_var(c));
    hs.lower.push_back(one_var(Rational(1)));
    hs.rho = params.z;
    return hyper_series_sum(hs, prec).constant_term();
}

TrackedReal gauss_2f1_at_1(const Rational& a, const Rational& b, const Rational& c, const Precision& p) {
    if (nonpositive_integer(c)) throw DomainError("lower parameter is a non-positive integer");
    if (a == 0 || b == 0) return TrackedReal(1L, p.bits());
    // A terminating series is finite for any c - a - b; let pfq_value do it.
    if (nonpositive_integer(a) || nonpositive_integer(b)) return pfq_value({{a, b}, {c}, 1}, p);
    if (c - a - b <= 0) throw DivergenceError("2F1 diverges at 1 unless c - a - b > 0");
    if (nonpositive_integer(c - a) || nonpositive_integer(c - b)) return TrackedReal(p.bits());
    int s1, s2, s3, s4;
    TrackedReal l = log_abs_gamma(c, s1, p);
    l += log_abs_gamma(c - a - b, s2, p);
    l -= log_abs_gamma(c - a, s3, p);
    l -= log_abs_gamma(c - b, s4, p);
    TrackedReal r = exp(l);
    if (s1 * s2 * s3 * s4 < 0) r = -r;
    return r;
}

}  // namespace mtv
