#include "mtv/errors.hpp"
#include "mtv/numerics.hpp"
#include "mtv/wordseries.hpp"

namespace mtv {

namespace {

void check_degree(int D) {
    if (D < 0 || D > kMaxWordSeriesDegree + 2) throw UsageError("word series degree out of range");
}

Exponent mono(int var, int d) {
    Exponent e(2, 0);
    e[static_cast<std::size_t>(var)] = d;
    return e;
}

Word z2_power(int n) {
    Word w;
    for (int i = 0; i < n; ++i) w += z(2);
    return w;
}

LinComb maybe_s(const Word& w, bool star) {
    LinComb x = LinComb::word(w);
    return star ? s_map(x) : x;
}

Rational pow2_neg(int k) {
    Rational r(1);
    r /= Rational(Integer(1) << k);
    return r;
}

// Shared shape of T and P: sum over a, b of (+-)(z2^a m z2^b) u^(2a) v^(2b).
WordSeries middle_series(const Word& middle, bool star, int D) {
    check_degree(D);
    WordSeries f = word_series_zero(D);
    for (int a = 0; 2 * a <= D; ++a)
        for (int b = 0; 2 * (a + b) <= D; ++b) {
            const Word w = z2_power(a) + middle + z2_power(b);
            LinComb c = star ? s_map(LinComb::word(w)) : LinComb::word(w);
            if (!star && (a + b) % 2) c = -c;
            f.set({2 * a, 2 * b}, c);
        }
    return f;
}

}  // namespace

WordSeries word_series_zero(int D) { return WordSeries(2, D, LinComb()); }

WordSeries series_S(int var, bool star, int D) {
    check_degree(D);
    WordSeries f = word_series_zero(D);
    for (int n = 0; 2 * n <= D; ++n) {
        LinComb c = maybe_s(z2_power(n), star);
        if (!star && n % 2) c = -c;
        f.set(mono(var, 2 * n), c);
    }
    return f;
}

WordSeries series_A(int var, int D) {
    check_degree(D);
    WordSeries f = word_series_zero(D);
    for (int r = 1; 2 * r <= D; ++r) f.set(mono(var, 2 * r), LinComb::word(z(2 * r + 1)));
    return f;
}

WordSeries series_B(int var, int D) {
    check_degree(D);
    WordSeries f = word_series_zero(D);
    for (int r = 1; 2 * r <= D; ++r)
        f.set(mono(var, 2 * r), LinComb::word(z(2 * r + 1), Coef(Rational(1) - pow2_neg(2 * r))));
    return f;
}

WordSeries series_T(bool star, int D) { return middle_series(z(3), star, D); }
WordSeries series_P(bool star, int D) { return middle_series(z(1), star, D); }

WordSeries series_T_hat(bool star, int D) {
    check_degree(D);
    WordSeries f = word_series_zero(D);
    for (int a = 0; 2 * a <= D; ++a)
        for (int b = 0; 2 * (a + b) <= D; ++b) {
            LinComb h;
            for (int r = 1; r <= a + b + 1; ++r) {
                Rational c = pow2_neg(2 * r) * ((Rational(1) - pow2_neg(2 * r)) * binomial(2 * r, 2 * a + 1) +
                                                binomial(2 * r, 2 * b + 1));
                if (c == 0) continue;
                if (!star && (r - 1) % 2) c = -c;
                LinComb term = LinComb::word(z(2 * r + 1)) * maybe_s(z2_power(a + b + 1 - r), star);
                h += term * c;
            }
            if (!star && (a + b) % 2) h = -h;
            f.set({2 * a, 2 * b}, h);
        }
    return f;
}

WordSeries series_P_hat(bool star, int D) {
    check_degree(D);
    WordSeries f = word_series_zero(D);
    const LinComb log2 = LinComb::word(Word(), Coef::L());
    for (int a = 0; 2 * a <= D; ++a)
        for (int b = 0; 2 * (a + b) <= D; ++b) {
            LinComb j;
            for (int r = 1; r <= a + b; ++r) {
                Rational c = pow2_neg(2 * r) *
                             (binomial(2 * r, 2 * a) + (Rational(1) - pow2_neg(2 * r)) * binomial(2 * r, 2 * b));
                if (c == 0) continue;
                if (!star && r % 2) c = -c;
                LinComb term = LinComb::word(z(2 * r + 1)) * maybe_s(z2_power(a + b - r), star);
                j += term * c;
            }
            if (a == 0) j += (LinComb::word(z(1)) - log2) * maybe_s(z2_power(b), star);
            if (b == 0) j += log2 * maybe_s(z2_power(a), star);
            if (!star && (a + b) % 2) j = -j;
            f.set({2 * a, 2 * b}, j);
        }
    return f;
}

WordSeries swap_uv(const WordSeries& f) {
    WordSeries r = word_series_zero(f.degree());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Exponent& e = f.exponent(i);
        r.set({e[1], e[0]}, f.at(i));
    }
    return r;
}

WordSeries divide_by_uv(const WordSeries& f, int D) {
    if (D + 2 > f.degree()) throw UsageError("divide_by_uv needs two more degrees of input");
    WordSeries r = word_series_zero(D);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Exponent& e = f.exponent(i);
        if (f.at(i).is_zero()) continue;
        if (e[0] == 0 || e[1] == 0) throw DomainError("series is not divisible by uv");
        if (e[0] + e[1] - 2 <= D) r.set({e[0] - 1, e[1] - 1}, f.at(i));
    }
    return r;
}

WordSeries substitute_half(const WordSeries& f, const Rational& cu, const Rational& cv) {
    return substitute_linear(f, {{cu, cv}, {Rational(0), Rational(0)}}, 2, f.degree());
}

WordSeries closed_T_hat(bool star, int D) {
    check_degree(D);
    const int E = D + 2;
    const Rational h(1, 2);
    WordSeries a = substitute_half(series_A(0, E), h, h) - substitute_half(series_A(0, E), h, -h);
    WordSeries b = substitute_half(series_B(0, E), h, h) - substitute_half(series_B(0, E), h, -h);
    WordSeries f = series_S(0, star, E) * a + series_S(1, star, E) * b;
    f *= h;
    return divide_by_uv(f, D);
}

WordSeries closed_P_hat(bool star, int D) {
    check_degree(D);
    const Rational h(1, 2);
    const WordSeries su = series_S(0, star, D), sv = series_S(1, star, D);
    WordSeries a = substitute_half(series_A(0, D), h, h) + substitute_half(series_A(0, D), h, -h);
    WordSeries b = substitute_half(series_B(0, D), h, h) + substitute_half(series_B(0, D), h, -h);
    WordSeries z1 = word_series_zero(D);
    z1.at(0) = LinComb::word(z(1));
    WordSeries log2 = word_series_zero(D);
    log2.at(0) = LinComb::word(Word(), Coef::L());
    WordSeries f = z1 * sv + log2 * (su - sv);
    WordSeries g = sv * a + su * b;
    g *= h;
    return f + g;
}

}  // namespace mtv
