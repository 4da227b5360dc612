#include "mtv/indices.hpp"

#include "mtv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace mtv {

bool is_positive(const Index& k) {
    return std::all_of(k.begin(), k.end(), [](int x) { return x >= 1; });
}

bool is_admissible(const Index& k) { return is_positive(k) && (k.empty() || k.front() >= 2); }

int weight(const Index& k) { return std::accumulate(k.begin(), k.end(), 0); }
int depth(const Index& k) { return static_cast<int>(k.size()); }
int height(const Index& k) {
    return static_cast<int>(std::count_if(k.begin(), k.end(), [](int x) { return x >= 2; }));
}

std::vector<Index> compositions(int k, int n, int min_part) {
    if (k > kMaxWeight) throw UsageError("weight cap exceeded");
    std::vector<Index> out;
    if (n < 0 || k < 0) return out;
    Index cur;
    std::function<void(int, int)> rec = [&](int left, int slots) {
        if (slots == 0) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int v = min_part; v <= left - min_part * (slots - 1); ++v) {
            cur.push_back(v);
            rec(left - v, slots - 1);
            cur.pop_back();
        }
    };
    rec(k, n);
    return out;
}

std::vector<Index> enumerate_I0(int k, int n, int s) {
    if (k > kMaxWeight) throw UsageError("weight cap exceeded");
    if (k < 0 || n < 0 || s < 0) throw UsageError("enumerate_I0 needs non-negative arguments");
    std::vector<Index> out;
    for (auto& c : compositions(k, n, 1)) {
        if (!c.empty() && c.front() < 2) continue;
        if (height(c) == s) out.push_back(std::move(c));
    }
    return out;
}

IndexStats index_stats(const Index& k) {
    return {weight(k), depth(k), height(k), is_admissible(k)};
}

std::vector<Index> enumerate_I0(int k, int n) {
    if (k > kMaxWeight) throw UsageError("weight cap exceeded");
    if (k < 0 || n < 0) throw UsageError("enumerate_I0 needs non-negative arguments");
    std::vector<Index> out;
    for (auto& c : compositions(k, n, 1))
        if (c.empty() || c.front() >= 2) out.push_back(std::move(c));
    return out;
}

std::vector<SetPartition> set_partitions(int n) {
    if (n < 0 || n > kMaxPartitionSize) throw UsageError("set_partitions size outside 0..8");
    std::vector<SetPartition> out;
    // Restricted growth strings.
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int maxb) {
        if (pos == n) {
            SetPartition sp;
            sp.blocks.resize(maxb + 1);
            for (int i = 0; i < n; ++i) sp.blocks[rgs[i]].push_back(i + 1);
            mpz_class c = 1;
            for (const auto& b : sp.blocks)
                for (std::size_t j = 2; j < b.size(); ++j) c *= static_cast<long>(j);
            sp.c = c;
            sp.c_tilde = ((n - static_cast<int>(sp.blocks.size())) % 2 == 0) ? sp.c : mpq_class(-sp.c);
            out.push_back(std::move(sp));
            return;
        }
        for (int b = 0; b <= maxb + 1; ++b) {
            rgs[pos] = b;
            rec(pos + 1, std::max(maxb, b));
        }
    };
    if (n == 0) {
        out.push_back({{}, 1, 1});
        return out;
    }
    rgs[0] = 0;
    rec(1, 0);
    return out;
}

std::string index_to_string(const Index& k) {
    std::ostringstream os;
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    return os.str();
}

Index parse_index(const std::string& s) {
    Index out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }),
                  tok.end());
        if (tok.empty()) {
            if (s.find_first_not_of(" \t") == std::string::npos) break;
            throw UsageError("empty entry in index '" + s + "'");
        }
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw UsageError("bad index entry '" + tok + "'");
        }
        if (used != tok.size()) throw UsageError("bad index entry '" + tok + "'");
        if (v < 1) throw UsageError("index entries must be positive, got " + tok);
        out.push_back(v);
    }
    return out;
}

}  // namespace mtv
