#pragma once

#include "mtv/errors.hpp"
#include "mtv/tracked_real.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace mtv {

using Exponent = std::vector<int>;

// All monomials of total degree <= D in `nvars` variables, ordered by degree
// and then lexicographically (x^2 before xy before y^2).
class MonomialBasis {
public:
    static std::shared_ptr<const MonomialBasis> get(int nvars, int degree);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    std::size_t size() const { return exps_.size(); }
    const Exponent& exponent(std::size_t i) const { return exps_[i]; }
    int total_degree(std::size_t i) const { return tdeg_[i]; }
    // -1 when the exponent is outside the truncation.
    long find(const Exponent& e) const;
    // Index of exps_[i] * exps_[j], or -1 if truncated away.
    long product(std::size_t i, std::size_t j) const { return mul_[i * exps_.size() + j]; }

    MonomialBasis(int nvars, int degree);

private:
    int nvars_;
    int degree_;
    std::vector<Exponent> exps_;
    std::vector<int> tdeg_;
    std::map<Exponent, long> index_;
    std::vector<long> mul_;
};

inline bool coeff_is_zero(const Rational& q) { return q == 0; }
inline bool coeff_is_zero(const TrackedReal& x) { return x.is_zero(); }

// Truncated multivariate power series with coefficients in a commutative
// ring C. C needs +, -, * and multiplication by Rational.
template <class C>
class Series {
public:
    Series() = default;
    Series(int nvars, int degree, const C& zero)
        : basis_(MonomialBasis::get(nvars, degree)), zero_(zero), c_(basis_->size(), zero) {}

    static Series constant(int nvars, int degree, const C& zero, const C& value) {
        Series s(nvars, degree, zero);
        s.c_[0] = value;
        return s;
    }
    // The variable x_i itself.
    static Series variable(int nvars, int degree, const C& zero, const C& one, int i) {
        Series s(nvars, degree, zero);
        if (degree >= 1) {
            Exponent e(nvars, 0);
            e[i] = 1;
            s.c_[s.basis_->find(e)] = one;
        }
        return s;
    }

    int nvars() const { return basis_->nvars(); }
    int degree() const { return basis_->degree(); }
    std::size_t size() const { return c_.size(); }
    const MonomialBasis& basis() const { return *basis_; }
    const C& zero() const { return zero_; }

    const C& at(std::size_t i) const { return c_[i]; }
    C& at(std::size_t i) { return c_[i]; }
    const Exponent& exponent(std::size_t i) const { return basis_->exponent(i); }

    C coeff(const Exponent& e) const {
        long i = basis_->find(e);
        return i < 0 ? zero_ : c_[i];
    }
    void set(const Exponent& e, const C& v) {
        long i = basis_->find(e);
        if (i < 0) throw UsageError("exponent outside the truncation");
        c_[i] = v;
    }
    const C& constant_term() const { return c_[0]; }

    // Exact coefficient types only.
    bool operator==(const Series& o) const { return basis_ == o.basis_ && c_ == o.c_; }

    Series& operator+=(const Series& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Series& operator*=(const Rational& q) {
        for (auto& x : c_) x *= q;
        return *this;
    }
    Series& scale(const C& k) {
        for (auto& x : c_)
            if (!coeff_is_zero(x)) x *= k;
        return *this;
    }
    Series operator-() const {
        Series r(*this);
        r *= Rational(-1);
        return r;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b) { return a.mul(b); }
    friend Series operator*(Series a, const Rational& q) { return a *= q; }

    Series mul(const Series& o) const {
        check(o);
        Series r(nvars(), degree(), zero_);
        const std::size_t n = c_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (coeff_is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < n; ++j) {
                long k = basis_->product(i, j);
                if (k < 0) continue;
                if (coeff_is_zero(o.c_[j])) continue;
                r.c_[k] += c_[i] * o.c_[j];
            }
        }
        return r;
    }

    // Same coefficients, new truncation degree (dropping or zero-padding).
    Series retruncate(int new_degree) const {
        Series r(nvars(), new_degree, zero_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            long k = r.basis_->find(exponent(i));
            if (k >= 0) r.c_[k] = c_[i];
        }
        return r;
    }

    bool is_nilpotent() const { return coeff_is_zero(c_[0]); }

private:
    void check(const Series& o) const {
        if (basis_ != o.basis_) throw UsageError("series with different variables or truncation");
    }

    std::shared_ptr<const MonomialBasis> basis_;
    C zero_{};
    std::vector<C> c_;
};

// exp(f) for f with zero constant term.
template <class C>
Series<C> exp_nilpotent(const Series<C>& f, const C& one) {
    if (!f.is_nilpotent()) throw DomainError("exp_nilpotent needs a zero constant term");
    Series<C> r = Series<C>::constant(f.nvars(), f.degree(), f.zero(), one);
    Series<C> pw = r;
    for (int k = 1; k <= f.degree(); ++k) {
        pw = pw * f;
        pw *= Rational(1, k);
        r += pw;
    }
    return r;
}

// log(1 + g) for g with zero constant term.
template <class C>
Series<C> log1p_nilpotent(const Series<C>& g) {
    if (!g.is_nilpotent()) throw DomainError("log1p_nilpotent needs a zero constant term");
    Series<C> r(g.nvars(), g.degree(), g.zero());
    Series<C> pw = g;
    for (int k = 1; k <= g.degree(); ++k) {
        if (k > 1) pw = pw * g;
        Series<C> t = pw;
        t *= Rational((k & 1) ? 1 : -1, k);
        r += t;
    }
    return r;
}

// 1/(1 + g) for g with zero constant term.
template <class C>
Series<C> inv1p_nilpotent(const Series<C>& g, const C& one) {
    if (!g.is_nilpotent()) throw DomainError("inv1p_nilpotent needs a zero constant term");
    Series<C> r = Series<C>::constant(g.nvars(), g.degree(), g.zero(), one);
    Series<C> pw = r;
    Series<C> ng = -g;
    for (int k = 1; k <= g.degree(); ++k) {
        pw = pw * ng;
        r += pw;
    }
    return r;
}

// prod_{j<n} (e2 + j e1 + j^2), i.e. (alpha)_n (beta)_n with e1 = alpha + beta,
// e2 = alpha beta.
template <class C>
Series<C> pochhammer_sym(long n, const Series<C>& e1, const Series<C>& e2, const C& one) {
    Series<C> r = Series<C>::constant(e1.nvars(), e1.degree(), e1.zero(), one);
    for (long j = 0; j < n; ++j) {
        Series<C> f = e2;
        Series<C> t = e1;
        t *= Rational(j);
        f += t;
        C jj = one;
        jj *= Rational(j * j);
        f.at(0) += jj;
        r = r * f;
    }
    return r;
}

Series<Rational> reciprocal(const Series<Rational>& f);
Series<Rational> exp(const Series<Rational>& f);
Series<Rational> log(const Series<Rational>& f);
Series<TrackedReal> reciprocal(const Series<TrackedReal>& f);
Series<TrackedReal> exp(const Series<TrackedReal>& f);
Series<TrackedReal> log(const Series<TrackedReal>& f);

Series<TrackedReal> to_tracked(const Series<Rational>& f, long bits);

// Replaces x_i by sum_j m[i][j] y_j, giving a series in `new_nvars` variables.
template <class C>
Series<C> substitute_linear(const Series<C>& f, const std::vector<std::vector<Rational>>& m, int new_nvars,
                            int new_degree) {
    if (static_cast<int>(m.size()) != f.nvars()) throw UsageError("substitution matrix has wrong shape");
    // Powers of each linear form, as rational series.
    std::vector<std::vector<Series<Rational>>> pw(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) {
        Series<Rational> form(new_nvars, new_degree, Rational(0));
        for (int j = 0; j < new_nvars; ++j) {
            Exponent e(new_nvars, 0);
            e[j] = 1;
            if (new_degree >= 1) form.set(e, m[i][j]);
        }
        pw[i].push_back(Series<Rational>::constant(new_nvars, new_degree, Rational(0), Rational(1)));
        for (int d = 1; d <= f.degree(); ++d) pw[i].push_back(pw[i].back() * form);
    }
    Series<C> r(new_nvars, new_degree, f.zero());
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (coeff_is_zero(f.at(k))) continue;
        const Exponent& e = f.exponent(k);
        Series<Rational> mono = Series<Rational>::constant(new_nvars, new_degree, Rational(0), Rational(1));
        for (int i = 0; i < f.nvars(); ++i) mono = mono * pw[i][e[i]];
        for (std::size_t t = 0; t < mono.size(); ++t) {
            if (mono.at(t) == 0) continue;
            C v = f.at(k);
            v *= mono.at(t);
            r.at(t) += v;
        }
    }
    return r;
}

std::string exponent_to_string(const Exponent& e);

}  // namespace mtv
