#pragma once

#include "mtv/indices.hpp"
#include "mtv/tracked_real.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mtv {

struct LevelParams {
    long N = 1;
    long a = 1;
};

// Throws UsageError unless N >= 1 and 1 <= a <= N.
void validate_level(const LevelParams& lv);

struct LParams {
    LevelParams level;
    long b = 0;
    Rational z = 1;
};

// t_{N,a}(s) for a single index entry s >= 2.
TrackedReal single_t(const LevelParams& lv, int s, const Precision& p);

// Strict nested sum m_1 > ... > m_n > 0, all m_i = a (mod N).
TrackedReal t_value(const LevelParams& lv, const Index& k, const Precision& p);
// Same with m_1 >= ... >= m_n.
TrackedReal t_star_value(const LevelParams& lv, const Index& k, const Precision& p);

// The interpolating series with shift b and argument z in [0, 1].
TrackedReal L_value(const LParams& lp, const Index& k, const Precision& p);

// Multiple t-star polylogarithm: sum over m_1 >= ... >= m_n >= 1 of
// prod z_i^(2m_i-1) / (2m_i-1)^(s_i). Each z_i must lie in (-1, 1].
TrackedReal ti_star(const Index& s, const std::vector<Rational>& z, const Precision& p);

// Cache key `t|N|a|b|idx=..|z=p/q|digits` shared with the CLI cache file.
std::string value_cache_key(const LParams& lp, const Index& k, int digits);

namespace detail {

// Tail functions of the nested sums along one residue class, as produced by
// the downward recursion. values[i][j] is W_i at m = m_lo + j*N for
// i = 0..depth; W_0 = 1.
//   strict: W_i(m) = sum_{m' > m} m'^(-k_i) W_{i-1}(m')
//   weak:   W_i(m) = sum_{m' >= m} m'^(-k_i) W_{i-1}(m')
struct TailProfile {
    long N = 1;
    long m_lo = 1;
    std::vector<std::vector<TrackedReal>> values;
};

// Profile for m in [m_lo, m_hi] (m_lo > 0 for weak, m_lo >= 1 - N for
// strict). The first index entry must be >= 2.
TailProfile tail_profile(long N, long m_lo, long m_hi, const Index& k, bool weak, const Precision& p);

}  // namespace detail

}  // namespace mtv
