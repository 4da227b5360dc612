#include "checks.hpp"

#include "mtv/errors.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>

namespace mtv {

namespace detail {

const std::string& ParamReader::raw(const std::string& key) const {
    auto it = p_.find(key);
    if (it == p_.end()) throw std::logic_error("check reads undeclared parameter '" + key + "'");
    return it->second;
}

long ParamReader::integer(const std::string& key) const {
    const std::string& s = raw(key);
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("parameter " + key + " must be an integer, got '" + s + "'");
}

Rational ParamReader::rational(const std::string& key) const {
    const std::string& s = raw(key);
    try {
        Rational q(s);
        if (q.get_den() != 0) {
            q.canonicalize();
            return q;
        }
    } catch (const std::exception&) {
    }
    throw UsageError("parameter " + key + " must be a rational p/q, got '" + s + "'");
}

Index ParamReader::index(const std::string& key) const { return parse_index(raw(key)); }

bool ParamReader::flag(const std::string& key) const {
    const std::string& s = raw(key);
    if (s == "1" || s == "true") return true;
    if (s == "0" || s == "false") return false;
    throw UsageError("parameter " + key + " must be 0 or 1, got '" + s + "'");
}

std::vector<Comparison> compare_series(const Series<TrackedReal>& lhs, const Series<TrackedReal>& rhs,
                                       const std::vector<std::string>& var_names) {
    if (lhs.size() != rhs.size() || lhs.nvars() != rhs.nvars()) throw std::logic_error("series shapes differ");
    std::vector<Comparison> out;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        const Exponent& e = lhs.exponent(i);
        std::string label;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (!label.empty()) label += ' ';
            label += var_names.at(j) + "^" + std::to_string(e[j]);
        }
        out.push_back({label.empty() ? "1" : label, lhs.at(i), rhs.at(i)});
    }
    return out;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

}  // namespace detail

double default_tol(const Precision& p) { return std::pow(10.0, 5 - p.digits); }

namespace {

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

nlohmann::ordered_json report_object(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["abs_diff"] = sci(r.abs_diff);
    j["allowed"] = sci(r.allowed);
    j["pass"] = r.pass;
    j["exact"] = r.exact;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

}  // namespace

std::string report_json(const CheckReport& r) { return report_object(r).dump(2); }

std::string suite_json(const SuiteResult& s) {
    nlohmann::ordered_json j;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : s.reports) j["reports"].push_back(report_object(r));
    nlohmann::ordered_json controls = nlohmann::ordered_json::array();
    int detected = 0;
    for (const auto& c : s.controls) {
        nlohmann::ordered_json o;
        o["id"] = c.id;
        o["params"] = params_to_string(c.params);
        o["detected"] = c.detected;
        if (!c.error.empty()) o["error"] = c.error;
        controls.push_back(o);
        if (c.detected) ++detected;
    }
    j["negative_control"] = controls;
    j["summary"] = {{"passed", s.passed},
                    {"failed", s.failed},
                    {"skipped", s.skipped},
                    {"reports", s.reports.size()},
                    {"controls_detected", detected},
                    {"controls", s.controls.size()}};
    j["errors"] = s.errors;
    return j.dump(2);
}

std::string params_to_string(const Params& p) {
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty()) s += ';';
        s += k + "=" + v;
    }
    return s;
}

Params parse_params(const std::string& s) {
    Params out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(';', start);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(start, end - start);
        auto trim = [](std::string x) {
            const auto a = x.find_first_not_of(" \t");
            const auto b = x.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : x.substr(a, b - a + 1);
        };
        item = trim(item);
        if (!item.empty()) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw UsageError("parameter '" + item + "' is not key=value");
            out[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
        }
        start = end + 1;
    }
    return out;
}

}  // namespace mtv
