#include "mtv/parallel.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mtv {

namespace {

TrackedReal eval_one(const TValueRequest& r, const Precision& p) {
    return r.star ? t_star_value(r.level, r.index, p) : t_value(r.level, r.index, p);
}

}  // namespace

int parallel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<TrackedReal> t_values_batch_serial(const std::vector<TValueRequest>& reqs, const Precision& p) {
    std::vector<TrackedReal> out;
    out.reserve(reqs.size());
    for (const auto& r : reqs) out.push_back(eval_one(r, p));
    return out;
}

std::vector<TrackedReal> t_values_batch(const std::vector<TValueRequest>& reqs, const Precision& p) {
    std::vector<TrackedReal> out(reqs.size(), TrackedReal(p.bits()));
    std::exception_ptr failure;
    const long n = static_cast<long>(reqs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        try {
            out[i] = eval_one(reqs[i], p);
        } catch (...) {
#pragma omp critical(mtv_batch_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace mtv
