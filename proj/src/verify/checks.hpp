#pragma once

#include "mtv/indices.hpp"
#include "mtv/powerseries.hpp"
#include "mtv/verify.hpp"

#include <functional>

namespace mtv::detail {

// Typed access to the merged parameter map (entry defaults overridden by
// the caller's values). Parse failures throw UsageError.
class ParamReader {
public:
    explicit ParamReader(Params merged) : p_(std::move(merged)) {}

    long integer(const std::string& key) const;
    Rational rational(const std::string& key) const;
    Index index(const std::string& key) const;
    bool flag(const std::string& key) const;

    const Params& params() const { return p_; }

private:
    const std::string& raw(const std::string& key) const;
    Params p_;
};

struct Comparison {
    std::string label;
    TrackedReal lhs;
    TrackedReal rhs;
};

struct ExactOutcome {
    bool holds = true;
    std::string where;
    std::string lhs;
    std::string rhs;
};

struct CheckOutcome {
    std::vector<Comparison> numeric;
    std::optional<ExactOutcome> exact;
};

using CheckFn = std::function<CheckOutcome(const ParamReader&, const Precision&, bool corrupt)>;

struct RegistryEntry {
    std::string id;
    Params defaults;  // also the set of accepted keys
    CheckFn fn;
    std::function<std::vector<Params>()> grid;
};

// Coefficientwise comparisons of two series with the same basis; the label
// is the exponent, e.g. "u^2 v^0 w^1".
std::vector<Comparison> compare_series(const Series<TrackedReal>& lhs, const Series<TrackedReal>& rhs,
                                       const std::vector<std::string>& var_names);

std::string rational_string(const Rational& q);

void register_genfun_checks(std::vector<RegistryEntry>& out);
void register_sum_checks(std::vector<RegistryEntry>& out);
void register_eval_checks(std::vector<RegistryEntry>& out);
void register_word_checks(std::vector<RegistryEntry>& out);

const std::vector<RegistryEntry>& registry();

}  // namespace mtv::detail
