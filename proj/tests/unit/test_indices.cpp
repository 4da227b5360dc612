#include "mtv/errors.hpp"
#include "mtv/indices.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace mtv;

namespace {

// All compositions of k from the 2^(k-1) cut patterns.
std::vector<Index> brute_compositions(int k) {
    std::vector<Index> out;
    for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
        Index c{1};
        for (int i = 0; i < k - 1; ++i) {
            if (mask & (1u << i))
                c.push_back(1);
            else
                ++c.back();
        }
        out.push_back(c);
    }
    return out;
}

long binomial_count(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long bell_triangle(int n) {
    std::vector<long> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<long> next{row.back()};
        for (long x : row) next.push_back(next.back() + x);
        row = next;
    }
    return row.front();
}

}  // namespace

TEST_CASE("index statistics") {
    IndexStats s = index_stats({3, 1, 2});
    CHECK(s.weight == 6);
    CHECK(s.depth == 3);
    CHECK(s.height == 2);
    CHECK(s.admissible);
    s = index_stats({});
    CHECK(s.weight == 0);
    CHECK(s.depth == 0);
    CHECK(s.height == 0);
    CHECK(s.admissible);
    s = index_stats({1, 2});
    CHECK(s.weight == 3);
    CHECK(s.depth == 2);
    CHECK(s.height == 1);
    CHECK_FALSE(s.admissible);
}

TEST_CASE("enumerate_I0 examples") {
    CHECK(enumerate_I0(4, 2, 1) == std::vector<Index>{{3, 1}});
    CHECK(enumerate_I0(2, 2, 1).empty());
    CHECK(enumerate_I0(4, 2, 2) == std::vector<Index>{{2, 2}});
}

TEST_CASE("enumerate_I0 matches a brute-force filter") {
    for (int k = 1; k <= 10; ++k) {
        const auto all = brute_compositions(k);
        for (int n = 1; n <= k; ++n) {
            std::vector<Index> by_depth;
            for (int s = 1; s <= n; ++s) {
                std::vector<Index> want;
                for (const auto& c : all)
                    if (depth(c) == n && height(c) == s && is_admissible(c)) want.push_back(c);
                auto got = enumerate_I0(k, n, s);
                std::sort(want.begin(), want.end());
                std::sort(got.begin(), got.end());
                CHECK(got == want);
                by_depth.insert(by_depth.end(), got.begin(), got.end());
            }
            auto all_n = enumerate_I0(k, n);
            std::sort(all_n.begin(), all_n.end());
            std::sort(by_depth.begin(), by_depth.end());
            CHECK(all_n == by_depth);
        }
    }
}

TEST_CASE("compositions") {
    CHECK(compositions(4, 2) == std::vector<Index>{{1, 3}, {2, 2}, {3, 1}});
    CHECK(compositions(6, 2, 2) == std::vector<Index>{{2, 4}, {3, 3}, {4, 2}});
    CHECK(compositions(3, 4).empty());
    for (int k = 1; k <= 10; ++k)
        for (int n = 1; n <= k; ++n)
            CHECK(static_cast<long>(compositions(k, n).size()) == binomial_count(k - 1, n - 1));
}

TEST_CASE("set partitions count the Bell numbers") {
    const std::vector<long> bell{1, 1, 2, 5, 15, 52, 203, 877};
    for (int n = 0; n <= 7; ++n) {
        CHECK(static_cast<long>(set_partitions(n).size()) == bell[n]);
        CHECK(bell_triangle(n) == bell[n]);
    }
    CHECK_THROWS_AS(set_partitions(kMaxPartitionSize + 1), UsageError);
}

TEST_CASE("set partition coefficients") {
    auto p2 = set_partitions(2);
    REQUIRE(p2.size() == 2);
    for (const auto& p : p2) {
        if (p.blocks.size() == 2) {
            CHECK(p.c == 1);
            CHECK(p.c_tilde == 1);
        } else {
            CHECK(p.c == 1);
            CHECK(p.c_tilde == -1);
        }
    }
    for (const auto& p : set_partitions(4))
        if (p.blocks.size() == 1) {
            CHECK(p.c == 6);
            CHECK(p.c_tilde == -6);
        }
}

TEST_CASE("signed partition coefficients sum to zero") {
    for (int n = 2; n <= 8; ++n) {
        mpq_class s = 0, unsigned_sum = 0;
        for (const auto& p : set_partitions(n)) {
            s += p.c_tilde;
            unsigned_sum += p.c;
        }
        CHECK(s == 0);
        // sum of c over partitions = number of permutations of n
        long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(unsigned_sum == fact);
    }
}

TEST_CASE("blocks partition {1..n}") {
    for (const auto& p : set_partitions(5)) {
        std::vector<int> seen;
        int prev_min = 0;
        for (const auto& b : p.blocks) {
            CHECK(std::is_sorted(b.begin(), b.end()));
            CHECK(b.front() > prev_min);
            prev_min = b.front();
            seen.insert(seen.end(), b.begin(), b.end());
        }
        std::sort(seen.begin(), seen.end());
        std::vector<int> want(5);
        std::iota(want.begin(), want.end(), 1);
        CHECK(seen == want);
    }
}

TEST_CASE("index parsing") {
    CHECK(parse_index("2,1,3") == Index{2, 1, 3});
    CHECK(parse_index(" 2, 3 ") == Index{2, 3});
    CHECK(index_to_string({2, 3}) == "2,3");
    CHECK_THROWS_AS(parse_index("2,,3"), UsageError);
    CHECK_THROWS_AS(parse_index("2,x"), UsageError);
    CHECK_THROWS_AS(parse_index("0"), UsageError);
}
