#pragma once

#include "mtv/verify.hpp"

#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace mtv {

struct Config {
    int digits = 30;
    int weight_cap = 24;
    int depth_cap = 12;
    // Applied to checks that take a deg / n_max parameter when set.
    std::optional<int> deg;
    std::optional<long> n_max;
    std::string cache_path = "tval_cache.txt";
    // Tolerance 10^(-tol_exponent); unset means 10^(5 - digits).
    std::optional<int> tol_exponent;
    // grid.<id> = k=v;k=v | k=v;k=v
    std::map<std::string, std::vector<Params>> grids;
};

// `key = value` lines, '#' starts a comment. Unknown keys and non-positive
// caps throw UsageError; an unreadable file throws UsageError too.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

struct CachedValue {
    std::string value;
    std::string err;
};

struct CacheStats {
    std::size_t records = 0;  // distinct keys
    long hits = 0;
    long misses = 0;
};

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Append-only text file, one `key value err` record per line; a later
// record for the same key wins. Hit/miss counters live in `<path>.stats`.
class ValueCache {
public:
    explicit ValueCache(std::string path);

    std::optional<CachedValue> lookup(const std::string& key);
    void store(const std::string& key, const CachedValue& v);
    void clear();
    CacheStats stats() const;
    // Current records sorted by key, in file syntax.
    void export_to(std::ostream& os) const;
    // Writes the counters back to the sidecar.
    void flush_stats() const;

private:
    std::string path_;
    std::unordered_map<std::string, CachedValue> map_;
    long hits_ = 0;
    long misses_ = 0;
    mutable std::mutex mu_;
};

// Exit codes: 0 pass, 1 fail, 2 usage, 3 precision unachievable.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mtv
