#pragma once

#include "mtv/tracked_real.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mtv {

using Params = std::map<std::string, std::string>;

struct CheckReport {
    std::string id;
    Params params;  // every parameter actually used, defaults included
    std::string lhs;
    std::string rhs;
    double abs_diff = 0;  // midpoint distance of the deciding comparison
    double err_sum = 0;   // errL + errR of that comparison
    double allowed = 0;   // err_sum + tol
    bool pass = false;
    bool exact = false;
    long runtime_ms = 0;
    std::string where;  // deciding coefficient or sub-check, if any
};

// 10^(5 - digits).
double default_tol(const Precision& p);

// Throws UsageError for an unknown id or parameter; numeric errors
// (PrecisionUnachievable, DivergenceError, ...) propagate. With `corrupt`
// the right-hand side is sabotaged: the rhs entry of largest magnitude has
// its sign flipped (exact checks: one rhs word coefficient is negated).
CheckReport run_check(const std::string& id, const Params& params, const Precision& p,
                      std::optional<double> tol = std::nullopt, bool corrupt = false);

std::vector<std::string> registry_ids();
// Default parameter grid of one registry entry, in run order.
std::vector<Params> default_grid(const std::string& id);
// Parameter defaults of one entry; its keys are the accepted parameters.
Params default_params(const std::string& id);

struct SuiteOptions {
    std::string filter = "*";  // shell glob over ids
    double budget_seconds = 600;
    std::optional<double> tol;
    bool negative_control = true;
    // Replaces the default grid of the named ids.
    std::map<std::string, std::vector<Params>> grids;
};

struct NegativeControl {
    std::string id;
    Params params;
    bool detected = false;  // the corrupted check failed
    std::string error;      // set if the corrupted run threw
};

struct SuiteResult {
    std::vector<CheckReport> reports;
    std::vector<NegativeControl> controls;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    std::vector<std::string> errors;  // "id {params}: message" for checks that threw
};

SuiteResult run_suite(const SuiteOptions& opts, const Precision& p);

// Runs the corrupted check at the last grid point of `id`.
NegativeControl negative_control(const std::string& id, const Params& params, const Precision& p,
                                 std::optional<double> tol = std::nullopt);

std::string report_json(const CheckReport& r);
std::string suite_json(const SuiteResult& s);
std::string params_to_string(const Params& p);
// Parses "k=v;k=v" (values may contain commas, e.g. index=2,3).
Params parse_params(const std::string& s);

}  // namespace mtv
