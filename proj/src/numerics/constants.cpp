#include "mtv/errors.hpp"
#include "mtv/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace mtv {

namespace {

std::shared_mutex g_const_mutex;
std::map<std::pair<int, long>, TrackedReal> g_const_cache;

std::mutex g_bern_mutex;
std::vector<Rational> g_bern{Rational(1), Rational(-1, 2)};

TrackedReal compute_constant(Constant c, long bits) {
    TrackedReal r(bits);
    switch (c) {
        case Constant::pi: mpfr_const_pi(r.raw(), MPFR_RNDN); break;
        case Constant::euler_gamma: mpfr_const_euler(r.raw(), MPFR_RNDN); break;
        case Constant::log2: mpfr_const_log2(r.raw(), MPFR_RNDN); break;
    }
    // Correctly rounded: half an ulp, charged as a full one.
    r.set_err(up(std::ldexp(r.abs_upper(), 1 - static_cast<int>(bits))));
    return r;
}

}  // namespace

TrackedReal constant(Constant c, const Precision& p) {
    const long bits = p.bits();
    const auto key = std::make_pair(static_cast<int>(c), bits);
    {
        std::shared_lock lock(g_const_mutex);
        auto it = g_const_cache.find(key);
        if (it != g_const_cache.end()) return it->second;
    }
    TrackedReal v = compute_constant(c, bits);
    std::unique_lock lock(g_const_mutex);
    g_const_cache.emplace(key, v);
    return v;
}

TrackedReal constant(std::string_view name, const Precision& p) {
    if (name == "pi") return constant(Constant::pi, p);
    if (name == "euler_gamma" || name == "gamma") return constant(Constant::euler_gamma, p);
    if (name == "log2") return constant(Constant::log2, p);
    throw UsageError("unknown constant: " + std::string(name));
}

Rational bernoulli(int n) {
    if (n < 0) throw UsageError("bernoulli index must be >= 0");
    if (n > 1 && (n & 1)) return Rational(0);
    std::lock_guard lock(g_bern_mutex);
    while (static_cast<int>(g_bern.size()) <= n) {
        const long m = static_cast<long>(g_bern.size());
        if (m > 1 && (m & 1)) {
            g_bern.emplace_back(0);
            continue;
        }
        // sum_{k<=m} C(m+1,k) B_k = 0
        Rational s = 0;
        Integer c = 1;
        for (long k = 0; k < m; ++k) {
            if (k > 0) {
                c *= (m + 2 - k);
                c /= k;
            }
            s += Rational(c) * g_bern[k];
        }
        Rational b = -s / Rational(m + 1);
        b.canonicalize();
        g_bern.push_back(b);
    }
    return g_bern[n];
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Rational(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational factorial(long n) {
    if (n < 0) throw UsageError("factorial of a negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

}  // namespace mtv
