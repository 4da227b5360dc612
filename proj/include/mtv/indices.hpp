#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mtv {

using Index = std::vector<int>;

inline constexpr int kMaxWeight = 24;
inline constexpr int kMaxPartitionSize = 8;

// Positive integers with k_1 >= 2 (the empty index counts as admissible).
bool is_admissible(const Index& k);
bool is_positive(const Index& k);
int weight(const Index& k);
int depth(const Index& k);
// Number of parts >= 2.
int height(const Index& k);

struct IndexStats {
    int weight = 0;
    int depth = 0;
    int height = 0;
    bool admissible = true;
};
IndexStats index_stats(const Index& k);

// Admissible indices of weight k, depth n and height s, lexicographically.
std::vector<Index> enumerate_I0(int k, int n, int s);
// Admissible indices of weight k and depth n, any height.
std::vector<Index> enumerate_I0(int k, int n);

// Compositions of k into n parts, each part >= min_part, lexicographically.
std::vector<Index> compositions(int k, int n, int min_part = 1);

using Block = std::vector<int>;

// c = prod (|P_j| - 1)!, c_tilde = (-1)^(n - #blocks) c.
struct SetPartition {
    std::vector<Block> blocks;
    mpq_class c;
    mpq_class c_tilde;
};

// Set partitions of {1..n}, blocks sorted and ordered by least element,
// enumerated by restricted growth strings. 0 <= n <= 8.
std::vector<SetPartition> set_partitions(int n);

std::string index_to_string(const Index& k);
// Parses "2,1,3" (whitespace tolerated). Throws UsageError on junk.
Index parse_index(const std::string& s);

}  // namespace mtv
