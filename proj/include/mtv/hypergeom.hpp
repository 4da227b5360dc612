#pragma once

#include "mtv/powerseries.hpp"
#include "mtv/tracked_real.hpp"

#include <vector>

namespace mtv {

// (b)_n = b (b+1) ... (b+n-1), (b)_0 = 1.
Rational pochhammer(const Rational& b, long n);

struct PFQParams {
    std::vector<Rational> uppers;  // b_1 .. b_{m+1}
    std::vector<Rational> lowers;  // c_1 .. c_m
    Rational z = 1;
};

// sum_n prod (b_i)_n / prod (c_i)_n z^n / n!, z in [0, 1].
TrackedReal pfq_value(const PFQParams& params, const Precision& p);

// Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
TrackedReal gauss_2f1_at_1(const Rational& a, const Rational& b, const Rational& c, const Precision& p);

// One factor of a term ratio: either (b + n - 1) for a series b, or
// (alpha + n - 1)(beta + n - 1) given only e1 = alpha + beta, e2 = alpha beta.
struct HyperParam {
    bool pair = false;
    Series<Rational> b;
    Series<Rational> e1, e2;

    static HyperParam single(Series<Rational> b);
    static HyperParam symmetric(Series<Rational> e1, Series<Rational> e2);
};

// sum_{n>=0} T_n rho^n with T_0 = 1 and
//   T_n / T_{n-1} = prod_upper f(n) / prod_lower f(n).
// Coefficients are series in the variables of the parameters. At rho = 1
// the tail is summed from an asymptotic expansion in 1/n (with log n
// powers when the exponent depends on the variables); the reported error
// comes from comparing two cutoffs.
struct HyperSum {
    std::vector<HyperParam> upper;
    std::vector<HyperParam> lower;
    Rational rho = 1;
    long n_max = 100000;
};

Series<TrackedReal> hyper_series_sum(const HyperSum& hs, const Precision& p);

namespace detail {
// Tail sum over n > M of n^(-sigma) log^l n for l = 0..lmax.
std::vector<TrackedReal> log_power_tail(const Rational& sigma, int lmax, long M, const Precision& p);
}  // namespace detail

}  // namespace mtv
