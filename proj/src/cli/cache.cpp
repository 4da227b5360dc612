#include "mtv/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace mtv {

namespace fs = std::filesystem;

ValueCache::ValueCache(std::string path) : path_(std::move(path)) {
    if (fs::exists(path_)) {
        std::ifstream in(path_);
        if (!in) throw CacheError("cannot read cache file '" + path_ + "'");
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            std::istringstream ls(line);
            std::string key;
            CachedValue v;
            if (!(ls >> key >> v.value >> v.err))
                throw CacheError("malformed cache record at " + path_ + ":" + std::to_string(lineno));
            map_[key] = v;
        }
    }
    std::ifstream st(path_ + ".stats");
    std::string word;
    while (st >> word) {
        if (word == "hits") st >> hits_;
        else if (word == "misses") st >> misses_;
    }
}

std::optional<CachedValue> ValueCache::lookup(const std::string& key) {
    std::lock_guard lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void ValueCache::store(const std::string& key, const CachedValue& v) {
    std::lock_guard lock(mu_);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw CacheError("cannot write cache file '" + path_ + "'");
    out << key << ' ' << v.value << ' ' << v.err << '\n';
    map_[key] = v;
}

void ValueCache::clear() {
    std::lock_guard lock(mu_);
    map_.clear();
    hits_ = misses_ = 0;
    std::error_code ec;
    fs::remove(path_, ec);
    fs::remove(path_ + ".stats", ec);
}

CacheStats ValueCache::stats() const {
    std::lock_guard lock(mu_);
    return {map_.size(), hits_, misses_};
}

void ValueCache::export_to(std::ostream& os) const {
    std::lock_guard lock(mu_);
    std::vector<std::pair<std::string, CachedValue>> rows(map_.begin(), map_.end());
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [k, v] : rows) os << k << ' ' << v.value << ' ' << v.err << '\n';
}

void ValueCache::flush_stats() const {
    std::lock_guard lock(mu_);
    std::ofstream out(path_ + ".stats");
    if (!out) throw CacheError("cannot write cache stats '" + path_ + ".stats'");
    out << "hits " << hits_ << "\nmisses " << misses_ << '\n';
}

}  // namespace mtv
