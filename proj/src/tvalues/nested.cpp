// Nested sums along one residue class, evaluated by downward recursion from
// an asymptotic expansion of the tail functions.
//
// For m -> infinity each tail function has an expansion
//     W_i(m) = sum_{p<=P} c_{i,p} m^(-p) + rho_i(m),  |rho_i(m)| <= E_i m^(-P-1)
// valid for every real m >= m0. Applying sum_{j>=1} f(m + jN) to c m^(-p)
// is the Hurwitz-type Euler-Maclaurin expansion
//     T_q(m) = m^(1-q)/(N(q-1)) - m^(-q)/2
//              + sum_r B_2r/(2r)! (q)_{2r-1} N^(2r-1) m^(1-q-2r),
// whose remainder is at most twice the first omitted term because x^(-q)
// is completely monotone. Everything dropped past m^(-P) is charged to E_i.

#include "mtv/errors.hpp"
#include "mtv/numerics.hpp"
#include "mtv/tvalues.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

namespace mtv::detail {

namespace {

struct Expansion {
    std::vector<TrackedReal> c;
    double E = 0.0;
};

// B_2r / (2r)! at a given precision, shared across calls.
const TrackedReal& bernoulli_over_factorial(int r, long bits) {
    static std::shared_mutex mu;
    static std::map<std::pair<int, long>, TrackedReal> cache;
    auto key = std::make_pair(r, bits);
    {
        std::shared_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    TrackedReal v(Rational(bernoulli(2 * r) / factorial(2 * r)), bits);
    std::unique_lock lock(mu);
    return cache.emplace(key, v).first->second;
}

Expansion apply_level(const Expansion& prev, int k, long N, bool weak, int P, double m0, long bits) {
    Expansion out;
    out.c.assign(P + 1, TrackedReal(bits));
    double E = 0.0;
    if (prev.E > 0.0) {
        E = up(E + up(prev.E * std::pow(m0, 1 - k) / (static_cast<double>(N) * (k + P)) * (1 + 1e-12)));
        if (weak) E = up(E + up(prev.E * std::pow(m0, -k) * (1 + 1e-12)));
    }
    const double Nd = static_cast<double>(N);
    for (int p = 0; p <= P; ++p) {
        const TrackedReal& c = prev.c[p];
        if (c.is_zero()) continue;
        const double cm = c.mag();
        const int q = k + p;
        if (q - 1 > P) {
            // Whole term dropped: T_q(m) <= m^(1-q) / (N(q-1)).
            E = up(E + up(cm * std::pow(m0, P + 2 - q) / (Nd * (q - 1)) * (1 + 1e-12)));
            if (weak) E = up(E + up(cm * std::pow(m0, P + 1 - q) * (1 + 1e-12)));
            continue;
        }
        TrackedReal lead = c;
        lead /= N * (q - 1);
        out.c[q - 1] += lead;
        if (q > P) {
            // T_q(m) lies between the integral and the integral minus m^(-q).
            E = up(E + up(cm * (1 + 1e-12)));
            continue;
        }
        TrackedReal half = c;
        half /= 2;
        if (weak)
            out.c[q] += half;
        else
            out.c[q] -= half;
        TrackedReal fac(bits);
        for (int r = 1;; ++r) {
            if (r == 1) {
                fac = TrackedReal(static_cast<long>(q) * N, bits);
            } else {
                fac *= static_cast<long>(q + 2 * r - 3) * (q + 2 * r - 2);
                fac *= N * N;
            }
            TrackedReal coef = fac * bernoulli_over_factorial(r, bits);
            const int e = q - 1 + 2 * r;
            if (e > P) {
                E = up(E + up(2.0 * cm * coef.mag() * std::pow(m0, P + 1 - e) * (1 + 1e-12)));
                break;
            }
            out.c[e] += c * coef;
        }
    }
    out.E = E;
    return out;
}

struct ExpansionKey {
    long N;
    bool weak;
    long bits;
    int P;
    long m0;
    Index prefix;
    bool operator<(const ExpansionKey& o) const {
        return std::tie(N, weak, bits, P, m0, prefix) < std::tie(o.N, o.weak, o.bits, o.P, o.m0, o.prefix);
    }
};

std::shared_mutex g_exp_mutex;
std::map<ExpansionKey, Expansion> g_exp_cache;

// Expansions for every prefix of k, computed once and memoized.
std::vector<Expansion> expansions(const Index& k, long N, bool weak, int P, long m0, long bits) {
    std::vector<Expansion> out;
    Expansion base;
    base.c.assign(P + 1, TrackedReal(bits));
    base.c[0] = TrackedReal(1L, bits);
    out.push_back(base);
    ExpansionKey key{N, weak, bits, P, m0, {}};
    for (std::size_t i = 0; i < k.size(); ++i) {
        key.prefix.push_back(k[i]);
        {
            std::shared_lock lock(g_exp_mutex);
            auto it = g_exp_cache.find(key);
            if (it != g_exp_cache.end()) {
                out.push_back(it->second);
                continue;
            }
        }
        Expansion e = apply_level(out.back(), k[i], N, weak, P, static_cast<double>(m0), bits);
        {
            std::unique_lock lock(g_exp_mutex);
            g_exp_cache.emplace(key, e);
        }
        out.push_back(std::move(e));
    }
    return out;
}

TrackedReal evaluate(const Expansion& e, long m, int P, long bits) {
    TrackedReal x = TrackedReal(1L, bits) / TrackedReal(m, bits);
    TrackedReal acc = e.c[P];
    for (int p = P - 1; p >= 0; --p) {
        acc *= x;
        acc += e.c[p];
    }
    acc.add_err(up(e.E * std::pow(static_cast<double>(m), -(P + 1)) * (1 + 1e-12)));
    return acc;
}

// m^(-k) for the recursion, memoized per call.
class InvPowers {
public:
    explicit InvPowers(long bits) : bits_(bits) {}
    const TrackedReal& get(long m, int k) {
        auto key = std::make_pair(m, k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(key, inv_pow(m, k, bits_)).first->second;
    }

private:
    long bits_;
    std::map<std::pair<long, int>, TrackedReal> memo_;
};

}  // namespace

TailProfile tail_profile(long N, long m_lo, long m_hi, const Index& k, bool weak, const Precision& p) {
    if (N < 1) throw UsageError("level N must be positive");
    if (k.empty()) throw UsageError("tail_profile needs a nonempty index");
    if (k.front() < 2) throw DivergenceError("nested sum diverges: first entry must be >= 2");
    if (!is_positive(k)) throw UsageError("index entries must be positive");
    if (weak ? m_lo < 1 : m_lo < 1 - N) throw UsageError("tail_profile: start outside the summation range");
    if (m_hi < m_lo) m_hi = m_lo;

    const long bits = p.bits();
    const int n = static_cast<int>(k.size());
    const int P = static_cast<int>(std::ceil(0.9 * (p.digits + 3))) + 6;
    const double target = p.inner_target();

    for (long Y = 2L * P; Y <= 200000; Y *= 2) {
        const long m0 = N * Y;
        long m_top = std::max(m0, m_hi);
        m_top = m_lo + ((m_top - m_lo + N - 1) / N) * N;
        const std::vector<Expansion> ex = expansions(k, N, weak, P, m0, bits);
        const double rem = ex[n].E * std::pow(static_cast<double>(m_top), -(P + 1));
        if (!(rem <= target)) continue;

        const long count = (m_top - m_lo) / N + 1;
        TailProfile prof;
        prof.N = N;
        prof.m_lo = m_lo;
        prof.values.assign(n + 1, std::vector<TrackedReal>(count, TrackedReal(bits)));
        for (long j = 0; j < count; ++j) prof.values[0][j] = TrackedReal(1L, bits);
        for (int i = 1; i <= n; ++i) prof.values[i][count - 1] = evaluate(ex[i], m_top, P, bits);

        InvPowers ip(bits);
        for (long j = count - 2; j >= 0; --j) {
            const long m = m_lo + j * N;
            for (int i = 1; i <= n; ++i) {
                TrackedReal& w = prof.values[i][j];
                w = prof.values[i][j + 1];
                if (weak) {
                    w += ip.get(m, k[i - 1]) * prof.values[i - 1][j];
                } else {
                    w += ip.get(m + N, k[i - 1]) * prof.values[i - 1][j + 1];
                }
            }
        }
        return prof;
    }
    std::ostringstream os;
    os << "nested sum tail for index (" << index_to_string(k) << ") did not reach 1e-" << p.digits + 3;
    throw PrecisionUnachievable(os.str());
}

}  // namespace mtv::detail
