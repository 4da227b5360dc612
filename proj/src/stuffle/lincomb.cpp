#include "mtv/errors.hpp"
#include "mtv/stuffle.hpp"

#include <sstream>

namespace mtv {

Coef::Coef(const Rational& q) {
    if (q != 0) t_[{0, 0}] = q;
}

Coef Coef::V() {
    Coef c;
    c.t_[{1, 0}] = 1;
    return c;
}

Coef Coef::L() {
    Coef c;
    c.t_[{0, 1}] = 1;
    return c;
}

bool Coef::is_rational() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{0, 0}); }

Rational Coef::rational() const {
    auto it = t_.find({0, 0});
    return it == t_.end() ? Rational(0) : it->second;
}

int Coef::v_degree() const {
    int d = 0;
    for (const auto& [m, q] : t_) d = std::max(d, m.first);
    return d;
}

Coef& Coef::operator+=(const Coef& o) {
    for (const auto& [m, q] : o.t_) {
        Rational& r = t_[m];
        r += q;
        if (r == 0) t_.erase(m);
    }
    return *this;
}

Coef& Coef::operator-=(const Coef& o) {
    for (const auto& [m, q] : o.t_) {
        Rational& r = t_[m];
        r -= q;
        if (r == 0) t_.erase(m);
    }
    return *this;
}

Coef& Coef::operator*=(const Rational& q) {
    if (q == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [m, r] : t_) r *= q;
    return *this;
}

Coef operator*(const Coef& a, const Coef& b) {
    Coef r;
    for (const auto& [ma, qa] : a.t_)
        for (const auto& [mb, qb] : b.t_) {
            Coef::Mono m{ma.first + mb.first, ma.second + mb.second};
            Rational& x = r.t_[m];
            x += qa * qb;
            if (x == 0) r.t_.erase(m);
        }
    return r;
}

TrackedReal Coef::eval(const Rational& V, const TrackedReal& log2) const {
    const long bits = log2.bits();
    TrackedReal s(bits);
    for (const auto& [m, q] : t_) {
        Rational c = q;
        for (int i = 0; i < m.first; ++i) c *= V;
        TrackedReal term(c, bits);
        for (int i = 0; i < m.second; ++i) term *= log2;
        s += term;
    }
    return s;
}

std::string Coef::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : t_) {
        std::string f;
        if (m.first > 0) f += "V" + (m.first > 1 ? "^" + std::to_string(m.first) : "");
        if (m.second > 0) f += (f.empty() ? "" : "*") + ("L" + (m.second > 1 ? "^" + std::to_string(m.second) : ""));
        Rational a = abs(q);
        if (first) os << (q < 0 ? "-" : "");
        else os << (q < 0 ? " - " : " + ");
        first = false;
        if (f.empty()) os << a.get_str();
        else if (a == 1) os << f;
        else os << a.get_str() << '*' << f;
    }
    return os.str();
}

LinComb::LinComb(const Rational& q) {
    if (q != 0) t_[Word()] = Coef(q);
}

LinComb LinComb::word(const Word& w, const Coef& c) {
    LinComb r;
    r.add(w, c);
    return r;
}

Coef LinComb::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Coef() : it->second;
}

void LinComb::add(const Word& w, const Coef& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

LinComb& LinComb::operator+=(const LinComb& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
    for (const auto& [w, c] : o.t_) add(w, Coef() - c);
    return *this;
}

LinComb& LinComb::operator*=(const Rational& q) {
    if (q == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [w, c] : t_) c *= q;
    return *this;
}

LinComb& LinComb::operator*=(const Coef& k) {
    Map out;
    for (auto& [w, c] : t_) {
        Coef x = c * k;
        if (!x.is_zero()) out.emplace(w, std::move(x));
    }
    t_.swap(out);
    return *this;
}

LinComb LinComb::operator-() const {
    LinComb r(*this);
    r *= Rational(-1);
    return r;
}

LinComb operator*(const LinComb& a, const LinComb& b) { return product(a, b, ProductMode::stuffle); }

std::string LinComb::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : t_) {
        std::string cs = c.to_string();
        bool neg = c.terms().size() == 1 && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        const std::string ws = word_to_string(w);
        if (c.terms().size() > 1) os << '(' << cs << ")*" << ws;
        else if (cs == "1") os << ws;
        else if (w.empty()) os << cs;
        else os << cs << '*' << ws;
    }
    return os.str();
}

LinComb product(const LinComb& a, const LinComb& b, ProductMode mode) {
    LinComb r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            const Coef c = ca * cb;
            for (const auto& [w, m] : word_product(wa, wb, mode)) {
                Coef cm = c;
                cm *= Rational(m);
                r.add(w, cm);
            }
        }
    return r;
}

LinComb power(const LinComb& w, int n, ProductMode mode) {
    if (n < 0) throw UsageError("power needs n >= 0");
    LinComb r(Rational(1));
    for (int i = 0; i < n; ++i) r = product(r, w, mode);
    return r;
}

}  // namespace mtv
