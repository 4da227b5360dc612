#include "mtv/tracked_real.hpp"

#include "mtv/errors.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace mtv {

namespace {

constexpr double kLog2of10 = 3.32192809488736234787;

double abs_up(mpfr_srcptr v) {
    if (mpfr_zero_p(v)) return 0.0;
    return std::fabs(mpfr_get_d(v, MPFR_RNDA));
}

double abs_down(mpfr_srcptr v) {
    if (mpfr_zero_p(v)) return 0.0;
    return std::fabs(mpfr_get_d(v, MPFR_RNDZ));
}

}  // namespace

double up(double x) { return x == 0.0 ? 0.0 : std::nextafter(x, std::numeric_limits<double>::infinity()); }
double down(double x) {
    double r = std::nextafter(x, -std::numeric_limits<double>::infinity());
    return r < 0.0 ? 0.0 : r;
}

Precision::Precision(int d, int g) : digits(d), guard(g) {
    if (d < 10) throw UsageError("precision needs at least 10 digits");
    if (d > 250) throw UsageError("precision capped at 250 digits");
}

long Precision::bits() const {
    return static_cast<long>(std::ceil((digits + guard) * kLog2of10)) + 8;
}

double Precision::target() const { return std::pow(10.0, 1 - digits); }
double Precision::inner_target() const { return std::pow(10.0, -digits - 3); }

TrackedReal::TrackedReal() : TrackedReal(64L) {}

TrackedReal::TrackedReal(long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

TrackedReal::TrackedReal(long n, long bits) {
    mpfr_init2(v_, bits);
    int t = mpfr_set_si(v_, n, MPFR_RNDN);
    round_err(t);
}

TrackedReal::TrackedReal(const Rational& q, long bits) {
    mpfr_init2(v_, bits);
    int t = mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    round_err(t);
}

TrackedReal::TrackedReal(const TrackedReal& o) : err_(o.err_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

TrackedReal::TrackedReal(TrackedReal&& o) noexcept : err_(o.err_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

TrackedReal& TrackedReal::operator=(const TrackedReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        err_ = o.err_;
    }
    return *this;
}

TrackedReal& TrackedReal::operator=(TrackedReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    std::swap(err_, o.err_);
    return *this;
}

TrackedReal::~TrackedReal() { mpfr_clear(v_); }

TrackedReal TrackedReal::from_mpfr(mpfr_srcptr v, double err, long bits) {
    TrackedReal r(bits);
    int t = mpfr_set(r.v_, v, MPFR_RNDN);
    r.err_ = err;
    r.round_err(t);
    return r;
}

void TrackedReal::round_err(int ternary) {
    if (ternary == 0) return;
    double u = std::ldexp(abs_up(v_), 1 - static_cast<int>(mpfr_get_prec(v_)));
    if (u == 0.0) u = DBL_MIN;
    err_ = up(err_ + up(u));
}

void TrackedReal::add_err(double e) { err_ = up(err_ + e); }

double TrackedReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

double TrackedReal::abs_upper() const { return abs_up(v_); }

double TrackedReal::mag() const { return up(abs_up(v_) + err_); }

double TrackedReal::abs_lower() const {
    double a = abs_down(v_);
    double r = down(a - err_);
    return r;
}

bool TrackedReal::is_zero() const { return mpfr_zero_p(v_) && err_ == 0.0; }

int TrackedReal::sign() const { return mpfr_sgn(v_); }

std::string TrackedReal::to_string(int digits) const {
    if (digits < 1) digits = 1;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

TrackedReal& TrackedReal::operator+=(const TrackedReal& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    int t = mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    err_ = up(err_ + o.err_);
    round_err(t);
    return *this;
}

TrackedReal& TrackedReal::operator-=(const TrackedReal& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    int t = mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    err_ = up(err_ + o.err_);
    round_err(t);
    return *this;
}

TrackedReal& TrackedReal::operator*=(const TrackedReal& o) {
    double ax = abs_up(v_), ay = abs_up(o.v_);
    double e = up(up(up(err_ * ay) + up(o.err_ * ax)) + up(err_ * o.err_));
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    int t = mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    err_ = e;
    round_err(t);
    return *this;
}

TrackedReal& TrackedReal::operator/=(const TrackedReal& o) {
    double ly = o.abs_lower();
    if (!(ly > 0.0)) throw DomainError("division by an interval containing zero");
    double ex = err_;
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    int t = mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    if (ex != 0.0 || o.err_ != 0.0) {
        double az = abs_up(v_);
        err_ = up(up(ex + up(az * o.err_)) / ly);
    } else {
        err_ = 0.0;
    }
    round_err(t);
    return *this;
}

TrackedReal& TrackedReal::operator*=(long n) {
    int t = mpfr_mul_si(v_, v_, n, MPFR_RNDN);
    err_ = up(err_ * std::fabs(static_cast<double>(n)));
    round_err(t);
    return *this;
}

TrackedReal& TrackedReal::operator/=(long n) {
    if (n == 0) throw DomainError("division by zero");
    int t = mpfr_div_si(v_, v_, n, MPFR_RNDN);
    err_ = up(err_ / std::fabs(static_cast<double>(n)));
    round_err(t);
    return *this;
}

TrackedReal& TrackedReal::operator*=(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return *this *= q.get_num().get_si();
    TrackedReal r(q, bits());
    return *this *= r;
}

TrackedReal TrackedReal::operator-() const {
    TrackedReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

TrackedReal exp(const TrackedReal& x) {
    TrackedReal r(x.bits());
    int t = mpfr_exp(r.raw(), x.value(), MPFR_RNDN);
    double az = r.abs_upper();
    if (x.err() > 0.0) r.set_err(up(az * up(std::expm1(x.err()) * (1.0 + 1e-12))));
    // mpfr_exp is correctly rounded; reuse the generic rounding charge.
    if (t != 0) r.add_err(up(std::ldexp(az, 1 - static_cast<int>(x.bits()))));
    return r;
}

TrackedReal log(const TrackedReal& x) {
    double lo = x.abs_lower();
    if (x.sign() <= 0 || !(lo > 0.0)) throw DomainError("log of a non-positive interval");
    TrackedReal r(x.bits());
    int t = mpfr_log(r.raw(), x.value(), MPFR_RNDN);
    double e = 0.0;
    if (x.err() > 0.0) e = up(-std::log1p(-up(x.err() / lo)) * (1.0 + 1e-12));
    r.set_err(e);
    if (t != 0) {
        double az = r.abs_upper();
        double u = std::ldexp(az, 1 - static_cast<int>(x.bits()));
        r.add_err(u == 0.0 ? DBL_MIN : up(u));
    }
    return r;
}

TrackedReal sqrt(const TrackedReal& x) {
    double lo = x.abs_lower();
    if (x.sign() < 0) throw DomainError("sqrt of a negative interval");
    TrackedReal r(x.bits());
    int t = mpfr_sqrt(r.raw(), x.value(), MPFR_RNDN);
    if (x.err() > 0.0) {
        if (!(lo > 0.0)) {
            r.set_err(up(std::sqrt(up(x.abs_upper() + x.err()))));
        } else {
            r.set_err(up(x.err() / down(std::sqrt(lo))));
        }
    }
    if (t != 0) r.add_err(up(std::ldexp(r.abs_upper(), 1 - static_cast<int>(x.bits()))));
    return r;
}

TrackedReal pow_int(const TrackedReal& x, long k) {
    if (k < 0) {
        TrackedReal one(1L, x.bits());
        return one / pow_int(x, -k);
    }
    TrackedReal result(1L, x.bits());
    TrackedReal base(x);
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

TrackedReal pow_rational(const TrackedReal& x, const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return pow_int(x, q.get_num().get_si());
    TrackedReal l = log(x);
    l *= q;
    return exp(l);
}

TrackedReal inv_pow(long m, long k, long bits) {
    if (m <= 0) throw DomainError("inv_pow needs a positive base");
    TrackedReal r(bits);
    mpfr_t t;
    mpfr_init2(t, bits + 32);
    // m^k exactly when it fits, otherwise correctly rounded.
    int tern = mpfr_ui_pow_ui(t, static_cast<unsigned long>(m), static_cast<unsigned long>(k), MPFR_RNDN);
    int t2 = mpfr_ui_div(r.raw(), 1UL, t, MPFR_RNDN);
    mpfr_clear(t);
    double az = r.abs_upper();
    double e = 0.0;
    if (tern != 0) e = up(std::ldexp(az, -static_cast<int>(bits) - 30));
    r.set_err(e);
    if (t2 != 0) r.add_err(up(std::ldexp(az, 1 - static_cast<int>(bits))));
    return r;
}

TrackedReal abs(const TrackedReal& x) {
    TrackedReal r(x);
    mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

double abs_diff_upper(const TrackedReal& a, const TrackedReal& b) {
    TrackedReal d = a - b;
    return d.mag();
}

double mid_diff(const TrackedReal& a, const TrackedReal& b) {
    long bits = std::max(a.bits(), b.bits()) + 16;
    mpfr_t d;
    mpfr_init2(d, bits);
    mpfr_sub(d, a.value(), b.value(), MPFR_RNDA);
    double r = mpfr_zero_p(d) ? 0.0 : std::fabs(mpfr_get_d(d, MPFR_RNDA));
    mpfr_clear(d);
    return r;
}

void enforce(const TrackedReal& x, const Precision& p) {
    double scale = std::max(1.0, x.abs_upper());
    if (!(x.err() <= p.target() * scale)) {
        std::ostringstream os;
        os << "error bound " << x.err() << " exceeds 1e" << (1 - p.digits) << " relative target";
        throw PrecisionUnachievable(os.str());
    }
}

}  // namespace mtv
