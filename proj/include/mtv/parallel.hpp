#pragma once

#include "mtv/tvalues.hpp"

#include <vector>

namespace mtv {

struct TValueRequest {
    LevelParams level;
    Index index;
    bool star = false;
};

// Evaluates every request. The parallel version distributes requests over
// OpenMP threads (dynamic schedule, since cost grows with depth); the
// serial version is the reference it is tested against.
std::vector<TrackedReal> t_values_batch(const std::vector<TValueRequest>& reqs, const Precision& p);
std::vector<TrackedReal> t_values_batch_serial(const std::vector<TValueRequest>& reqs, const Precision& p);

// Number of OpenMP threads the kernels will use (1 without OpenMP).
int parallel_threads();

}  // namespace mtv
