#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace mtv {

using Rational = mpq_class;
using Integer = mpz_class;

// Working precision. `digits` is what the caller asks for; internal
// arithmetic carries `guard` extra decimal digits.
struct Precision {
    int digits = 30;
    int guard = 16;

    Precision() = default;
    // Throws UsageError for fewer than 10 digits.
    explicit Precision(int d, int g = 16);

    long bits() const;
    // Largest acceptable absolute error for a value of magnitude <= 1.
    double target() const;
    // Internal target used to size truncations (a few digits past `digits`).
    double inner_target() const;
};

// Midpoint-radius real: the exact value lies in [value - err, value + err].
// Every operation rounds the radius upward, so the enclosure is rigorous
// as long as the inputs were.
class TrackedReal {
public:
    TrackedReal();
    explicit TrackedReal(long bits);
    TrackedReal(long n, long bits);
    TrackedReal(const Rational& q, long bits);
    TrackedReal(const TrackedReal& o);
    TrackedReal(TrackedReal&& o) noexcept;
    TrackedReal& operator=(const TrackedReal& o);
    TrackedReal& operator=(TrackedReal&& o) noexcept;
    ~TrackedReal();

    // Takes a copy of an mpfr value (rounded to `bits`).
    static TrackedReal from_mpfr(mpfr_srcptr v, double err, long bits);

    long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
    double err() const { return err_; }
    void add_err(double e);
    void set_err(double e) { err_ = e; }
    mpfr_srcptr value() const { return v_; }
    mpfr_ptr raw() { return v_; }

    double to_double() const;
    // Upper bound for |value| + err.
    double mag() const;
    // Upper bound for |value| alone.
    double abs_upper() const;
    // Lower bound for |x| over the enclosure (0 if the ball contains 0).
    double abs_lower() const;
    bool is_zero() const;
    int sign() const;

    // Scientific notation with `digits` significant digits.
    std::string to_string(int digits) const;

    TrackedReal& operator+=(const TrackedReal& o);
    TrackedReal& operator-=(const TrackedReal& o);
    TrackedReal& operator*=(const TrackedReal& o);
    TrackedReal& operator/=(const TrackedReal& o);
    TrackedReal& operator*=(long n);
    TrackedReal& operator/=(long n);
    TrackedReal& operator*=(const Rational& q);
    TrackedReal operator-() const;

    friend TrackedReal operator+(TrackedReal a, const TrackedReal& b) { return a += b; }
    friend TrackedReal operator-(TrackedReal a, const TrackedReal& b) { return a -= b; }
    friend TrackedReal operator*(TrackedReal a, const TrackedReal& b) { return a *= b; }
    friend TrackedReal operator/(TrackedReal a, const TrackedReal& b) { return a /= b; }
    friend TrackedReal operator*(TrackedReal a, long n) { return a *= n; }
    friend TrackedReal operator*(TrackedReal a, const Rational& q) { return a *= q; }

private:
    void round_err(int ternary);

    mpfr_t v_;
    double err_ = 0.0;
};

TrackedReal exp(const TrackedReal& x);
TrackedReal log(const TrackedReal& x);
TrackedReal sqrt(const TrackedReal& x);
TrackedReal pow_int(const TrackedReal& x, long k);
// x^q for x > 0.
TrackedReal pow_rational(const TrackedReal& x, const Rational& q);
// m^(-k) for a positive integer m.
TrackedReal inv_pow(long m, long k, long bits);
TrackedReal abs(const TrackedReal& x);

// Enclosure of |a - b| as an upper bound.
double abs_diff_upper(const TrackedReal& a, const TrackedReal& b);
// Midpoint distance |mid(a) - mid(b)|, rounded up.
double mid_diff(const TrackedReal& a, const TrackedReal& b);

// Throws PrecisionUnachievable unless err <= 10^(1-digits) * max(1, |v|).
void enforce(const TrackedReal& x, const Precision& p);

// Round-up helpers for double-valued error terms.
double up(double x);
double down(double x);

}  // namespace mtv
