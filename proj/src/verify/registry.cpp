#include "checks.hpp"

#include "mtv/errors.hpp"

#include <fnmatch.h>

#include <chrono>

namespace mtv {

namespace detail {

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> reg = [] {
        std::vector<RegistryEntry> r;
        register_genfun_checks(r);
        register_sum_checks(r);
        register_eval_checks(r);
        register_word_checks(r);
        return r;
    }();
    return reg;
}

}  // namespace detail

namespace {

using detail::Comparison;

const detail::RegistryEntry& entry(const std::string& id) {
    for (const auto& e : detail::registry())
        if (e.id == id) return e;
    throw UsageError("unknown check id '" + id + "'");
}

Params merged(const detail::RegistryEntry& e, const Params& given) {
    Params m = e.defaults;
    for (const auto& [k, v] : given) {
        if (!e.defaults.count(k)) throw UsageError("check " + e.id + " has no parameter '" + k + "'");
        m[k] = v;
    }
    return m;
}

void fill_numeric(CheckReport& rep, std::vector<Comparison>& cs, double tol, bool corrupt, int digits) {
    if (cs.empty()) throw std::logic_error("check produced no comparisons");
    if (corrupt) {
        std::size_t big = 0;
        for (std::size_t i = 1; i < cs.size(); ++i)
            if (cs[i].rhs.abs_upper() > cs[big].rhs.abs_upper()) big = i;
        cs[big].rhs = -cs[big].rhs;
    }
    // The deciding comparison: the first failure, or else the one closest
    // to its allowance.
    std::size_t pick = 0;
    double worst = -1;
    bool failed = false;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const double diff = mid_diff(cs[i].lhs, cs[i].rhs);
        const double allowed = up(up(cs[i].lhs.err() + cs[i].rhs.err()) + tol);
        const bool ok = diff <= allowed;
        const double ratio = diff / allowed;
        if (!ok && !failed) {
            failed = true;
            pick = i;
        } else if (!failed && ratio > worst) {
            worst = ratio;
            pick = i;
        }
    }
    const Comparison& c = cs[pick];
    rep.lhs = c.lhs.to_string(digits);
    rep.rhs = c.rhs.to_string(digits);
    rep.abs_diff = mid_diff(c.lhs, c.rhs);
    rep.err_sum = up(c.lhs.err() + c.rhs.err());
    rep.allowed = up(rep.err_sum + tol);
    rep.pass = !failed;
    rep.where = c.label;
}

}  // namespace

CheckReport run_check(const std::string& id, const Params& params, const Precision& p, std::optional<double> tol,
                      bool corrupt) {
    const auto t0 = std::chrono::steady_clock::now();
    if (tol && !(*tol >= 0)) throw UsageError("tolerance must be nonnegative");
    const detail::RegistryEntry& e = entry(id);
    const detail::ParamReader reader(merged(e, params));
    detail::CheckOutcome out = e.fn(reader, p, corrupt);

    CheckReport rep;
    rep.id = id;
    rep.params = reader.params();
    const double t = tol.value_or(default_tol(p));
    if (out.exact) {
        rep.exact = true;
        rep.pass = out.exact->holds;
        rep.abs_diff = rep.pass ? 0 : 1;
        rep.allowed = 0;
        rep.lhs = rep.pass ? "exact" : out.exact->lhs;
        rep.rhs = rep.pass ? "exact" : out.exact->rhs;
        rep.where = out.exact->where;
    } else {
        fill_numeric(rep, out.numeric, t, corrupt, p.digits);
    }
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

std::vector<std::string> registry_ids() {
    std::vector<std::string> ids;
    for (const auto& e : detail::registry()) ids.push_back(e.id);
    return ids;
}

std::vector<Params> default_grid(const std::string& id) { return entry(id).grid(); }

Params default_params(const std::string& id) { return entry(id).defaults; }

NegativeControl negative_control(const std::string& id, const Params& params, const Precision& p,
                                 std::optional<double> tol) {
    NegativeControl nc;
    nc.id = id;
    nc.params = params;
    try {
        nc.detected = !run_check(id, params, p, tol, true).pass;
    } catch (const std::exception& ex) {
        nc.error = ex.what();
    }
    return nc;
}

SuiteResult run_suite(const SuiteOptions& opts, const Precision& p) {
    struct Task {
        const detail::RegistryEntry* entry;
        Params params;
        bool control;
    };
    std::vector<Task> tasks;
    const std::string filter = opts.filter.empty() ? "*" : opts.filter;
    for (const auto& e : detail::registry()) {
        if (fnmatch(filter.c_str(), e.id.c_str(), 0) != 0) continue;
        auto it = opts.grids.find(e.id);
        const std::vector<Params> grid = it != opts.grids.end() ? it->second : e.grid();
        for (const auto& params : grid) tasks.push_back({&e, params, false});
        if (opts.negative_control && !grid.empty()) tasks.push_back({&e, grid.back(), true});
    }

    struct Slot {
        bool ran = false;
        std::optional<CheckReport> report;
        std::string error;
        NegativeControl control;
    };
    std::vector<Slot> slots(tasks.size());
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };

#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (elapsed() > opts.budget_seconds) continue;
        const Task& t = tasks[i];
        Slot& s = slots[i];
        s.ran = true;
        if (t.control) {
            s.control = negative_control(t.entry->id, t.params, p, opts.tol);
            continue;
        }
        try {
            s.report = run_check(t.entry->id, t.params, p, opts.tol);
        } catch (const std::exception& ex) {
            s.error = ex.what();
        }
    }

    SuiteResult res;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const Task& t = tasks[i];
        Slot& s = slots[i];
        if (t.control) {
            if (s.ran) res.controls.push_back(std::move(s.control));
            continue;
        }
        if (!s.ran) {
            ++res.skipped;
        } else if (s.report) {
            (s.report->pass ? res.passed : res.failed) += 1;
            res.reports.push_back(std::move(*s.report));
        } else {
            CheckReport r;
            r.id = t.entry->id;
            r.params = t.params;
            r.lhs = "error";
            r.rhs = s.error;
            ++res.failed;
            res.reports.push_back(std::move(r));
            res.errors.push_back(t.entry->id + " {" + params_to_string(t.params) + "}: " + s.error);
        }
    }
    return res;
}

}  // namespace mtv
