#include "mtv/powerseries.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mtv {

MonomialBasis::MonomialBasis(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 0 || degree < 0) throw UsageError("series needs non-negative variable count and degree");
    Exponent cur(nvars, 0);
    for (int d = 0; d <= degree; ++d) {
        // Lexicographically descending exponents of total degree d.
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == nvars - 1) {
                cur[pos] = left;
                exps_.push_back(cur);
                tdeg_.push_back(d);
                return;
            }
            for (int v = left; v >= 0; --v) {
                cur[pos] = v;
                rec(pos + 1, left - v);
            }
        };
        if (nvars == 0) {
            if (d == 0) {
                exps_.push_back({});
                tdeg_.push_back(0);
            }
        } else {
            rec(0, d);
        }
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) index_[exps_[i]] = static_cast<long>(i);
    const std::size_t n = exps_.size();
    mul_.assign(n * n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (tdeg_[i] + tdeg_[j] > degree) continue;
            Exponent e(nvars);
            for (int v = 0; v < nvars; ++v) e[v] = exps_[i][v] + exps_[j][v];
            mul_[i * n + j] = index_.at(e);
        }
    }
}

std::shared_ptr<const MonomialBasis> MonomialBasis::get(int nvars, int degree) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(nvars, degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto b = std::make_shared<const MonomialBasis>(nvars, degree);
    cache.emplace(key, b);
    return b;
}

long MonomialBasis::find(const Exponent& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? -1 : it->second;
}

Series<Rational> reciprocal(const Series<Rational>& f) {
    const Rational c0 = f.constant_term();
    if (c0 == 0) throw DomainError("reciprocal of a series with zero constant term");
    Series<Rational> g = f;
    g *= Rational(1) / c0;
    g.at(0) = 0;
    Series<Rational> r = inv1p_nilpotent(g, Rational(1));
    r *= Rational(1) / c0;
    return r;
}

Series<Rational> exp(const Series<Rational>& f) {
    if (f.constant_term() != 0) throw DomainError("exp of a rational series needs a zero constant term");
    return exp_nilpotent(f, Rational(1));
}

Series<Rational> log(const Series<Rational>& f) {
    if (f.constant_term() != 1) throw DomainError("log of a rational series needs constant term 1");
    Series<Rational> g = f;
    g.at(0) = 0;
    return log1p_nilpotent(g);
}

Series<TrackedReal> reciprocal(const Series<TrackedReal>& f) {
    const TrackedReal& c0 = f.constant_term();
    const long bits = c0.bits();
    TrackedReal inv = TrackedReal(1L, bits) / c0;
    Series<TrackedReal> g = f;
    g.scale(inv);
    g.at(0) = TrackedReal(bits);
    Series<TrackedReal> r = inv1p_nilpotent(g, TrackedReal(1L, bits));
    r.scale(inv);
    return r;
}

Series<TrackedReal> exp(const Series<TrackedReal>& f) {
    const long bits = f.constant_term().bits();
    TrackedReal e0 = exp(f.constant_term());
    Series<TrackedReal> g = f;
    g.at(0) = TrackedReal(bits);
    Series<TrackedReal> r = exp_nilpotent(g, TrackedReal(1L, bits));
    r.scale(e0);
    return r;
}

Series<TrackedReal> log(const Series<TrackedReal>& f) {
    const TrackedReal& c0 = f.constant_term();
    const long bits = c0.bits();
    TrackedReal inv = TrackedReal(1L, bits) / c0;
    Series<TrackedReal> g = f;
    g.scale(inv);
    g.at(0) = TrackedReal(bits);
    Series<TrackedReal> r = log1p_nilpotent(g);
    r.at(0) = log(c0);
    return r;
}

Series<TrackedReal> to_tracked(const Series<Rational>& f, long bits) {
    Series<TrackedReal> r(f.nvars(), f.degree(), TrackedReal(bits));
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.at(i) != 0) r.at(i) = TrackedReal(f.at(i), bits);
    return r;
}

std::string exponent_to_string(const Exponent& e) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

}  // namespace mtv
