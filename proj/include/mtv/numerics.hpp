#pragma once

#include "mtv/tracked_real.hpp"

#include <optional>
#include <string_view>

namespace mtv {

enum class Constant { pi, euler_gamma, log2 };

// Correctly rounded constant at the working precision of `p`.
TrackedReal constant(Constant c, const Precision& p);
TrackedReal constant(std::string_view name, const Precision& p);

// Exact Bernoulli number with B_1 = -1/2.
Rational bernoulli(int n);

// sum_{j>=0} (j+q)^(-s), s >= 2, q > 0.
TrackedReal hurwitz_zeta(int s, const Rational& q, const Precision& p);
TrackedReal zeta(int s, const Precision& p);

// Digamma and log-Gamma at a positive rational argument.
TrackedReal digamma(const Rational& q, const Precision& p);
TrackedReal log_gamma(const Rational& q, const Precision& p);

Rational binomial(long n, long k);
Rational factorial(long n);

namespace detail {
// Euler-Maclaurin with the first M terms summed directly; nullopt if the
// asymptotic part does not settle at this shift.
std::optional<TrackedReal> hurwitz_zeta_shift(int s, const Rational& q, long M, const Precision& p);
long hurwitz_default_shift(const Precision& p);
}  // namespace detail

}  // namespace mtv
