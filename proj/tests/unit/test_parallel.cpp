#include "mtv/errors.hpp"
#include "mtv/indices.hpp"
#include "mtv/parallel.hpp"
#include "mtv/verify.hpp"

#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mtv;

namespace {

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

std::vector<TValueRequest> mixed_requests() {
    std::vector<TValueRequest> reqs;
    for (long N = 1; N <= 4; ++N)
        for (long a = 1; a <= N; ++a)
            for (int w = 2; w <= 6; ++w)
                for (int n = 1; n < w; ++n)
                    for (const auto& k : enumerate_I0(w, n)) reqs.push_back({{N, a}, k, (w + n) % 2 == 0});
    return reqs;
}

std::string strip_runtime(const SuiteResult& s) {
    std::string out;
    for (CheckReport r : s.reports) {
        r.runtime_ms = 0;
        out += report_json(r) + "\n";
    }
    for (const auto& c : s.controls) out += c.id + params_to_string(c.params) + (c.detected ? "+" : "-") + "\n";
    return out;
}

}  // namespace

TEST_CASE("parallel batch equals the serial reference") {
    const Precision p(30);
    const auto reqs = mixed_requests();
    REQUIRE(reqs.size() > 100);
    for (int threads : {1, 2, 4}) {
        set_threads(threads);
        const auto par = t_values_batch(reqs, p);
        const auto ser = t_values_batch_serial(reqs, p);
        REQUIRE(par.size() == ser.size());
        for (std::size_t i = 0; i < par.size(); ++i) {
            CHECK(mid_diff(par[i], ser[i]) == 0);
            CHECK(par[i].err() == ser[i].err());
        }
    }
    set_threads(4);
    CHECK(parallel_threads() >= 1);
}

TEST_CASE("a failing request propagates out of the parallel region") {
    auto reqs = mixed_requests();
    reqs.push_back({{2, 1}, {1, 2}, false});
    CHECK_THROWS_AS(t_values_batch(reqs, Precision(20)), DivergenceError);
    CHECK_THROWS_AS(t_values_batch_serial(reqs, Precision(20)), DivergenceError);
}

TEST_CASE("suite results do not depend on the thread count") {
    const Precision p(30);
    SuiteOptions o;
    // every entry at the ends of its grid
    for (const auto& id : registry_ids()) {
        const auto g = default_grid(id);
        o.grids[id] = g.size() > 1 ? std::vector<Params>{g.front(), g.back()} : g;
    }
    set_threads(1);
    const SuiteResult one = run_suite(o, p);
    set_threads(4);
    const SuiteResult four = run_suite(o, p);
    CHECK(one.failed == 0);
    CHECK(one.skipped == 0);
    CHECK(strip_runtime(one) == strip_runtime(four));
}
