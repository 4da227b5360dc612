#pragma once

#include "mtv/powerseries.hpp"
#include "mtv/tvalues.hpp"

namespace mtv {

using TSeries = Series<TrackedReal>;
using RSeries = Series<Rational>;

// Variables of the three-parameter generating functions: u, v, w.
inline constexpr int kVarU = 0;
inline constexpr int kVarV = 1;
inline constexpr int kVarW = 2;

inline constexpr int kMaxSeriesDegree = 10;
inline constexpr long kDefaultNMax = 10000;

// sum over admissible k with (weight, depth, height) = (k, n, s) of t or t*,
// placed at u^(k-n-s) v^(n-s) w^(s-1), for all monomials of total degree <= D.
TSeries lhs_ohno_zagier(const LevelParams& lv, int D, const Precision& p, bool star);

// Same monomials, but each index contributes the interpolating series
// L_{N,a,b}(k; z) with b = N (nonstar) or b = 0 (star).
TSeries lhs_ohno_zagier_z(const LevelParams& lv, int D, const Precision& p, bool star, const Rational& z);

// z^a / (a(a-u)) 3F2(alpha, beta, 1; (a+N)/N, (a+N-u)/N; z^N), or the star
// counterpart, coefficientwise in (u, v, w).
TSeries rhs_ohno_zagier(const LevelParams& lv, int D, const Precision& p, bool star, const Rational& z = 1,
                        long n_max = kDefaultNMax);

enum class HeightOneMode { two_variable, fixed_m };

// two_variable: series in (u, v), coefficient of u^(k-n-1) v^(n-1) is
// t(k-n+1, {1}^(n-1)). fixed_m: series in v alone, coefficient of v^(n-1)
// is t(m, {1}^(n-1)).
TSeries height_one_lhs(const LevelParams& lv, HeightOneMode mode, int m, bool star, int D, const Precision& p);
TSeries height_one_series(const LevelParams& lv, HeightOneMode mode, int m, bool star, int D, const Precision& p,
                          long n_max = kDefaultNMax);

struct SeriesPair {
    TSeries lhs;
    TSeries rhs;
};

// Series in (u, w). lhs = 1 + sum G(k,n,n) u^(k-2n) w^n (star: G*), rhs the
// exponential form with x + y = u, xy = w (star: xy = -w).
SeriesPair maximal_height_series(const LevelParams& lv, bool star, int D, const Precision& p);

// Rational series c_n(u, w), n = 2..2D, such that the rhs exponent of
// maximal_height_series is sum_n t_{N,a}(n) c_n.
std::vector<RSeries> maximal_height_exponent(bool star, int D);

// p_n = x^n + y^n for x + y = e1, xy = e2, n = 0..nmax.
std::vector<RSeries> newton_power_sums(const RSeries& e1, const RSeries& e2, int nmax);

struct WeightedSums {
    TrackedReal lhs;
    TrackedReal lhs_star;
    TrackedReal rhs;
};

// Level (2a, a), weight k >= 2.
WeightedSums weighted_sum_sides(long a, int k, const Precision& p);

// The weight-k coefficient of a^(-2) 2^(2u/a) t(2) exp(sum_n c_n t(n) u^n),
// expanded directly as a power series (an independent route to the rhs).
TrackedReal weighted_sum_rhs_series(long a, int k, const Precision& p);

}  // namespace mtv
