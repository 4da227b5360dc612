#pragma once

#include "mtv/tvalues.hpp"

#include <vector>

namespace mtv {

inline constexpr int kMaxEvalWeightParam = 5;  // cap on a + b

struct EvalParams {
    int a = 0;
    int b = 0;
    Rational V = 0;
    Precision p;
};

// t(n) = (1 - 2^(-n)) zeta(n), the level-2 single value through zeta.
TrackedReal t_from_zeta(int n, const Precision& p);

// t*({2}^a, 3, {2}^b) as a sum of t*({2}^m) zeta(2r+1).
TrackedReal thm41_rhs(const EvalParams& ep);
// The star-stuffle regularized t*({2}^a, 1, {2}^b) at parameter V.
TrackedReal thm42_rhs(const EvalParams& ep);
// t({2}^a, 3, {2}^b), alternating version with t({2}^m) weights.
TrackedReal murakami_rhs(const EvalParams& ep);
// The stuffle regularized t({2}^a, 1, {2}^b) at parameter V.
TrackedReal charlton_rhs(const EvalParams& ep);

// Coefficient of x^(2n) in 1/cos(pi x / 2), from the secant (Euler zigzag)
// numbers. 0 <= n <= 12.
TrackedReal sec_genfun(int n, const Precision& p);
// |E_2n|: 1, 1, 5, 61, 1385, ...
Integer secant_number(int n);

struct CoeffCheck {
    int a = 0;  // exponent of x^2 (or (2x)^2)
    int b = 0;
    TrackedReal lhs;
    TrackedReal rhs;
};

// Coefficients of x^(2a) y^(2b), a + b <= D/2, of
//   sum K*(a,b) x^(2a) y^(2b),  K* = 2^(2(a+b)+3) t*({2}^a,3,{2}^b)
// versus (A(x+y)-A(x-y))/(xy cos pi x) + (B(x+y)-B(x-y))/(xy cos pi y).
// D even, D <= 8.
std::vector<CoeffCheck> g_star_identity_check(int D, const Precision& p);

// Coefficients of x^(2a) y^(2b), a + b <= D/2, of
//   sum Ti*_{{2}^a,1,{2}^b}({1}^a, z, {1}^b) (2x)^(2a) (2y)^(2b)
// versus z/((1-4y^2) cos pi x) 4F3(1, 3/2, 1/2-x, 1/2+x; 1/2, 3/2-y, 3/2+y; z^2).
// 0 <= z <= 3/4; D even, D <= 4.
std::vector<CoeffCheck> ti_4f3_check(const Rational& z, int D, const Precision& p);

}  // namespace mtv
