#include "mtv/cli.hpp"

#include "mtv/errors.hpp"
#include "mtv/hypergeom.hpp"
#include "mtv/indices.hpp"
#include "mtv/tvalues.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mtv {

namespace {

const char* kVerifyUsage =
    "Usage: tval verify ID [--KEY VALUE]... [options]\n"
    "       tval verify --suite GLOB [options]\n"
    "       tval verify --list\n"
    "Check parameters are passed as --KEY VALUE (e.g. --N 2 --a 1 --index 2,3).\n"
    "Options:\n"
    "  --digits N      working precision\n"
    "  --tol X         absolute tolerance (default 10^(5-digits))\n"
    "  --suite GLOB    run every registry entry matching GLOB over its grid\n"
    "  --json FILE     also write the JSON report to FILE\n"
    "  --budget SEC    suite time budget (default 600)\n"
    "  --no-control    skip the negative controls\n"
    "  --corrupt       flip the sign of the rhs before comparing (single check)\n"
    "  --config FILE   key = value config file (default $TVAL_CONFIG)\n";

Config resolve_config(const std::string& flag_path) {
    if (!flag_path.empty()) return load_config(flag_path);
    if (const char* env = std::getenv("TVAL_CONFIG"); env && *env) return load_config(env);
    return Config{};
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw UsageError("not a rational number: '" + s + "'");
    if (q.get_den() == 0) throw UsageError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::vector<Rational> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(parse_rational(part));
    if (out.empty()) throw UsageError("empty list of rationals");
    return out;
}

std::string rational_key(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

std::string list_key(const std::vector<Rational>& qs) {
    std::string s;
    for (std::size_t i = 0; i < qs.size(); ++i) s += (i ? "," : "") + rational_key(qs[i]);
    return s;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

void check_caps(const Index& k, const Config& c) {
    if (weight(k) > c.weight_cap)
        throw UsageError("index weight " + std::to_string(weight(k)) + " exceeds weight_cap " +
                         std::to_string(c.weight_cap));
    if (static_cast<int>(k.size()) > c.depth_cap)
        throw UsageError("index depth " + std::to_string(k.size()) + " exceeds depth_cap " +
                         std::to_string(c.depth_cap));
}

struct ComputeArgs {
    std::string kind;
    long N = 1;
    long a = 1;
    std::optional<long> b;
    std::string index;
    std::optional<int> s;
    std::string z;
    std::string upper;
    std::string lower;
    std::optional<int> digits;
    std::string config;
    bool no_cache = false;
};

// Returns the cache key and a thunk computing the value.
std::pair<std::string, std::function<TrackedReal()>> compute_plan(const ComputeArgs& a, const Config& c,
                                                                   const Precision& p) {
    const LevelParams lv{a.N, a.a};
    const std::string digits = std::to_string(p.digits);
    auto need_index = [&] {
        if (a.index.empty()) throw UsageError(a.kind + " needs --index");
        Index k = parse_index(a.index);
        check_caps(k, c);
        return k;
    };
    // Keys follow value_cache_key with the kind in the first field.
    auto keyed = [&](const std::string& kind, const LParams& lp, const Index& k) {
        std::string key = value_cache_key(lp, k, p.digits);
        return kind + key.substr(key.find('|'));
    };

    if (a.kind == "t" || a.kind == "tstar") {
        validate_level(lv);
        const Index k = need_index();
        const bool star = a.kind == "tstar";
        return {keyed(a.kind, {lv, 0, 1}, k),
                [=] { return star ? t_star_value(lv, k, p) : t_value(lv, k, p); }};
    }
    if (a.kind == "L") {
        validate_level(lv);
        const Index k = need_index();
        const LParams lp{lv, a.b.value_or(0), a.z.empty() ? Rational(1) : parse_rational(a.z)};
        return {keyed("L", lp, k), [=] { return L_value(lp, k, p); }};
    }
    if (a.kind == "single") {
        validate_level(lv);
        if (!a.s) throw UsageError("single needs --s");
        const int s = *a.s;
        check_caps(Index{s}, c);
        return {keyed("single", {lv, 0, 1}, Index{s}), [=] { return single_t(lv, s, p); }};
    }
    if (a.kind == "tistar") {
        const Index k = need_index();
        if (a.z.empty()) throw UsageError("tistar needs --z (one value, or one per index entry)");
        std::vector<Rational> zs = parse_rationals(a.z);
        if (zs.size() == 1) zs.assign(k.size(), zs[0]);
        if (zs.size() != k.size()) throw UsageError("tistar needs as many --z values as index entries");
        return {"tistar|idx=" + index_to_string(k) + "|z=" + list_key(zs) + "|" + digits,
                [=] { return ti_star(k, zs, p); }};
    }
    if (a.kind == "pfq") {
        if (a.upper.empty()) throw UsageError("pfq needs --upper");
        PFQParams pp;
        pp.uppers = parse_rationals(a.upper);
        if (!a.lower.empty()) pp.lowers = parse_rationals(a.lower);
        pp.z = a.z.empty() ? Rational(1) : parse_rational(a.z);
        return {"pfq|up=" + list_key(pp.uppers) + "|lo=" + list_key(pp.lowers) + "|z=" + rational_key(pp.z) + "|" +
                    digits,
                [=] { return pfq_value(pp, p); }};
    }
    throw UsageError("unknown compute kind '" + a.kind + "' (t, tstar, L, tistar, pfq, single)");
}

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
    const Config c = resolve_config(a.config);
    const Precision p(a.digits.value_or(c.digits));
    auto [key, run] = compute_plan(a, c, p);
    std::optional<ValueCache> cache;
    if (!a.no_cache) cache.emplace(c.cache_path);
    if (cache) {
        if (auto hit = cache->lookup(key)) {
            cache->flush_stats();
            out << hit->value << ' ' << hit->err << ' ' << p.digits << '\n';
            return 0;
        }
    }
    const TrackedReal x = run();
    enforce(x, p);
    const CachedValue v{x.to_string(p.digits), sci(x.err())};
    if (cache) {
        cache->store(key, v);
        cache->flush_stats();
    }
    out << v.value << ' ' << v.err << ' ' << p.digits << '\n';
    return 0;
}

int cmd_cache(const std::string& action, const std::string& config, std::ostream& out) {
    const Config c = resolve_config(config);
    ValueCache cache(c.cache_path);
    if (action == "stats") {
        const CacheStats s = cache.stats();
        const long total = s.hits + s.misses;
        out << "records " << s.records << "\nhits " << s.hits << "\nmisses " << s.misses << "\nhit_rate "
            << (total ? static_cast<double>(s.hits) / total : 0.0) << '\n';
    } else if (action == "clear") {
        cache.clear();
        out << "cleared " << c.cache_path << '\n';
    } else if (action == "export") {
        cache.export_to(out);
    } else {
        throw UsageError("unknown cache action '" + action + "' (stats, clear, export)");
    }
    return 0;
}

struct VerifyArgs {
    std::string id;
    Params params;
    std::optional<int> digits;
    std::optional<double> tol;
    std::string suite;
    std::string json;
    std::string config;
    double budget = 600;
    bool control = true;
    bool corrupt = false;
    bool list = false;
    bool help = false;
};

VerifyArgs parse_verify(const std::vector<std::string>& args) {
    VerifyArgs v;
    auto number = [](const std::string& flag, const std::string& s) {
        char* end = nullptr;
        const double x = std::strtod(s.c_str(), &end);
        if (s.empty() || *end) throw UsageError(flag + " expects a number, got '" + s + "'");
        return x;
    };
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string tok = args[i];
        if (tok.rfind("--", 0) != 0) {
            if (!v.id.empty()) throw UsageError("more than one check id given");
            v.id = tok;
            continue;
        }
        std::string key = tok.substr(2), val;
        bool has_val = false;
        if (auto eq = key.find('='); eq != std::string::npos) {
            val = key.substr(eq + 1);
            key.erase(eq);
            has_val = true;
        }
        if (key == "help") {
            v.help = true;
            continue;
        }
        if (key == "no-control") {
            v.control = false;
            continue;
        }
        if (key == "list") {
            v.list = true;
            continue;
        }
        if (key == "corrupt") {
            v.corrupt = true;
            continue;
        }
        if (key.empty()) throw UsageError("empty flag '--'");
        if (!has_val) {
            if (i + 1 >= args.size()) throw UsageError("--" + key + " needs a value");
            val = args[++i];
        }
        if (key == "digits")
            v.digits = static_cast<int>(number("--digits", val));
        else if (key == "tol")
            v.tol = number("--tol", val);
        else if (key == "suite")
            v.suite = val;
        else if (key == "json")
            v.json = val;
        else if (key == "config")
            v.config = val;
        else if (key == "budget")
            v.budget = number("--budget", val);
        else
            v.params[key] = val;
    }
    return v;
}

// Config deg / n_max fill in for checks that take them.
Params with_config(const std::string& id, Params params, const Config& c) {
    const Params defaults = default_params(id);
    if (c.deg && defaults.count("deg") && !params.count("deg")) params["deg"] = std::to_string(*c.deg);
    if (c.n_max && defaults.count("n_max") && !params.count("n_max")) params["n_max"] = std::to_string(*c.n_max);
    return params;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text << '\n';
}

int cmd_verify(const VerifyArgs& v, std::ostream& out) {
    if (v.help) {
        out << kVerifyUsage;
        return 0;
    }
    if (v.list) {
        for (const auto& id : registry_ids()) out << id << '\n';
        return 0;
    }
    const Config c = resolve_config(v.config);
    const Precision p(v.digits.value_or(c.digits));
    std::optional<double> tol = v.tol;
    if (!tol && c.tol_exponent) tol = std::pow(10.0, -*c.tol_exponent);

    if (!v.suite.empty()) {
        if (!v.id.empty()) throw UsageError("give either a check id or --suite, not both");
        if (!v.params.empty()) throw UsageError("check parameters cannot be combined with --suite");
        if (v.corrupt) throw UsageError("--corrupt applies to a single check");
        SuiteOptions opts;
        opts.filter = v.suite;
        opts.budget_seconds = v.budget;
        opts.tol = tol;
        opts.negative_control = v.control;
        for (const auto& id : registry_ids()) {
            auto it = c.grids.find(id);
            std::vector<Params> grid = it != c.grids.end() ? it->second : default_grid(id);
            for (auto& g : grid) g = with_config(id, g, c);
            opts.grids[id] = grid;
        }
        const SuiteResult r = run_suite(opts, p);
        for (const auto& rep : r.reports)
            out << (rep.pass ? "PASS " : "FAIL ") << rep.id << " {" << params_to_string(rep.params) << "}"
                << (rep.exact ? " exact" : " diff=" + sci(rep.abs_diff) + " allowed=" + sci(rep.allowed)) << '\n';
        int undetected = 0;
        for (const auto& nc : r.controls)
            if (!nc.detected) {
                ++undetected;
                out << "CONTROL NOT DETECTED " << nc.id << " {" << params_to_string(nc.params) << "}"
                    << (nc.error.empty() ? "" : " error: " + nc.error) << '\n';
            }
        out << "summary: " << r.passed << " passed, " << r.failed << " failed, " << r.skipped << " skipped, "
            << r.controls.size() - undetected << "/" << r.controls.size() << " negative controls detected\n";
        if (!v.json.empty()) write_file(v.json, suite_json(r));
        return r.failed == 0 && undetected == 0 ? 0 : 1;
    }

    if (v.id.empty()) throw UsageError("verify needs a check id or --suite (see tval verify --list)");
    const CheckReport rep = run_check(v.id, with_config(v.id, v.params, c), p, tol, v.corrupt);
    const std::string json = report_json(rep);
    out << json << '\n';
    if (!v.json.empty()) write_file(v.json, json);
    return rep.pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        if (argc >= 2 && std::string(argv[1]) == "verify")
            return cmd_verify(parse_verify(std::vector<std::string>(argv + 2, argv + argc)), out);

        CLI::App app{"Multiple t-values: evaluation and identity verification", "tval"};
        app.require_subcommand(1);
        app.add_subcommand("verify", "Run one registry check or a suite (see tval verify --help)");

        ComputeArgs ca;
        CLI::App* compute = app.add_subcommand("compute", "Print `value err digits` for one quantity");
        compute->add_option("kind", ca.kind, "t, tstar, L, tistar, pfq or single")->required();
        compute->add_option("--N", ca.N, "level");
        compute->add_option("--a", ca.a, "residue, 1 <= a <= N");
        compute->add_option("--b", ca.b, "shift of L");
        compute->add_option("--index", ca.index, "comma-separated, outermost first");
        compute->add_option("--s", ca.s, "argument of single");
        compute->add_option("--z", ca.z, "rational argument (tistar: comma list)");
        compute->add_option("--upper", ca.upper, "pfq upper parameters");
        compute->add_option("--lower", ca.lower, "pfq lower parameters");
        compute->add_option("--digits", ca.digits, "working precision");
        compute->add_option("--config", ca.config, "config file (default $TVAL_CONFIG)");
        compute->add_flag("--no-cache", ca.no_cache, "neither read nor write the value cache");

        std::string action, cache_config;
        CLI::App* cache = app.add_subcommand("cache", "Inspect the value cache");
        cache->add_option("action", action, "stats, clear or export")->required();
        cache->add_option("--config", cache_config, "config file (default $TVAL_CONFIG)");

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int rc = app.exit(e, out, err);
            return rc == 0 ? 0 : 2;
        }
        if (compute->parsed()) return cmd_compute(ca, out);
        return cmd_cache(action, cache_config, out);
    } catch (const PrecisionUnachievable& e) {
        err << "precision unachievable: " << e.what() << '\n';
        return 3;
    } catch (const DivergenceError& e) {
        err << "divergent: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const CacheError& e) {
        err << "cache error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace mtv
