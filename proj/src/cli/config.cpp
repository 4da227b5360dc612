#include "mtv/cli.hpp"

#include "mtv/errors.hpp"

#include <fstream>
#include <sstream>

namespace mtv {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long positive(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    long n = 0;
    try {
        n = std::stol(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || v.empty()) throw UsageError("config: " + key + " is not an integer: '" + v + "'");
    if (n <= 0) throw UsageError("config: " + key + " must be positive");
    return n;
}

std::vector<Params> parse_grid(const std::string& v) {
    std::vector<Params> g;
    std::stringstream ss(v);
    std::string point;
    while (std::getline(ss, point, '|'))
        if (!trim(point).empty()) g.push_back(parse_params(trim(point)));
    return g;
}

}  // namespace

Config parse_config(const std::string& text) {
    Config c;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string v = trim(line.substr(eq + 1));
        if (key == "digits")
            c.digits = static_cast<int>(positive(key, v));
        else if (key == "weight_cap")
            c.weight_cap = static_cast<int>(positive(key, v));
        else if (key == "depth_cap")
            c.depth_cap = static_cast<int>(positive(key, v));
        else if (key == "deg")
            c.deg = static_cast<int>(positive(key, v));
        else if (key == "n_max")
            c.n_max = positive(key, v);
        else if (key == "tol_exponent")
            c.tol_exponent = static_cast<int>(positive(key, v));
        else if (key == "cache_path") {
            if (v.empty()) throw UsageError("config: cache_path is empty");
            c.cache_path = v;
        } else if (key.rfind("grid.", 0) == 0)
            c.grids[key.substr(5)] = parse_grid(v);
        else
            throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace mtv
