#pragma once

// Suite orchestration, JSON reports and the structure-constant cache behind
// the tyv command line.

#include "tyv/bridge.hpp"
#include "tyv/check.hpp"
#include "tyv/embedding.hpp"
#include "tyv/rank_one.hpp"
#include "tyv/root_checks.hpp"
#include "tyv/root_data.hpp"
#include "tyv/twisted_current.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tyv {

inline constexpr const char* kToolName = "tyv";
inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kNormalization = "short-roots-sq2;bourbaki;extraspecial-lex;eta-rescaled";
inline constexpr const char* kRankOneNormalization = "sl2;(a,a)=2";

/// Usage and configuration problems; the CLI maps these to exit status 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> s{"classical", "embedding", "casimir", "rank1", "rtt", "all"};
    return s;
}

inline const std::vector<std::string>& classical_types() {
    static const std::vector<std::string> t{"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"};
    return t;
}
inline const std::vector<std::string>& embedding_types() {
    static const std::vector<std::string> t{"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"};
    return t;
}

/// Coefficient ids that some suite reads through Mutation::coefficient.
inline const std::map<std::string, std::set<std::string>>& mutation_ids() {
    static const std::map<std::string, std::set<std::string>> m{
        {"classical", {"tchbf", "tcfSerre0f", "tcfSerre1f", "tcfSerre2f", "tcfSerre3f", "tcfSerre3f.2"}},
        {"embedding", {"phi_h_xsq"}},
        {"casimir", {"phi_h_xsq"}},
        {"rank1", {"ty1", "ty2", "add-rel", "xiuxi0"}},
        {"rtt", {}},
    };
    return m;
}

struct SuiteConfig {
    std::string suite;
    std::optional<std::string> type;
    int zdeg = 6;
    std::optional<int> order;
    int maxidx = 10;
    std::string json_path;
    Mutation mutation;
    int jobs = 1;

    /// Derivation-chain induction window; the chain runs in z-degree max(zdeg, window).
    int window = 8;

    void validate() const;
    int rank1_order() const { return order.value_or(8); }
    int rtt_order() const { return order.value_or(6); }
};

inline void SuiteConfig::validate() const {
    if (std::find(known_suites().begin(), known_suites().end(), suite) == known_suites().end())
        throw ConfigError("unknown suite '" + suite + "'");
    if (zdeg < 1) throw ConfigError("--zdeg must be at least 1");
    if (order && *order < 1) throw ConfigError("--order must be at least 1");
    if (maxidx < 1) throw ConfigError("--maxidx must be at least 1");
    if (jobs < 1) throw ConfigError("--jobs must be at least 1");
    if (type) {
        try {
            LieType::parse(*type);
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
        if (suite == "rank1" || suite == "rtt")
            if (LieType::parse(*type).name() != "A1") throw ConfigError("suite " + suite + " is rank one; --type must be A1");
    }
    std::set<std::string> usable;
    for (const auto& [s, ids] : mutation_ids())
        if (suite == "all" || suite == s) usable.insert(ids.begin(), ids.end());
    std::istringstream parts(mutation.str());
    std::string part;
    while (std::getline(parts, part, ',')) {
        std::string id = part.substr(0, part.rfind(':'));
        if (!usable.count(id)) throw ConfigError("mutation id '" + id + "' is not used by suite " + suite);
    }
}

struct ItemResult {
    std::string id, anchor, status, detail;
    long long millis = 0;
    std::size_t residual_terms = 0;
};

struct CheckReport {
    std::string suite, lie_type, normalization;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<ItemResult> items;

    bool all_pass() const {
        return std::all_of(items.begin(), items.end(), [](const ItemResult& r) { return r.status == "pass"; });
    }
    bool any_error() const {
        return std::any_of(items.begin(), items.end(), [](const ItemResult& r) { return r.status == "error"; });
    }
    /// 0 all pass, 1 some check fails, 2 some item raised
    int exit_code() const { return any_error() ? 2 : all_pass() ? 0 : 1; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["tool"] = kToolName;
        j["version"] = kVersion;
        j["suite"] = suite;
        j["lie_type"] = lie_type;
        j["params"] = params;
        j["normalization"] = normalization;
        j["items"] = nlohmann::ordered_json::array();
        for (const auto& r : items) {
            nlohmann::ordered_json it;
            it["id"] = r.id;
            it["anchor"] = r.anchor;
            it["status"] = r.status;
            it["millis"] = r.millis;
            it["detail"] = r.detail;
            j["items"].push_back(std::move(it));
        }
        return j;
    }
};

inline void write_report(const CheckReport& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write report to '" + path + "'");
    out << r.to_json().dump(2) << "\n";
    if (!out) throw ConfigError("failed writing report to '" + path + "'");
}

/// Runs items on up to `jobs` threads; results keep the item order.
inline std::vector<ItemResult> run_items(const std::vector<CheckItem>& items, int jobs) {
    std::vector<ItemResult> out(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < items.size();) {
            const CheckItem& it = items[k];
            ItemResult& r = out[k];
            r.id = it.id;
            r.anchor = it.anchor;
            auto t0 = std::chrono::steady_clock::now();
            try {
                Outcome o = it.run();
                r.status = o.pass ? "pass" : "fail";
                r.detail = o.detail;
                r.residual_terms = o.residual_terms;
            } catch (const std::exception& e) {
                r.status = "error";
                r.detail = e.what();
            }
            r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    int n = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

// ---- structure-constant cache ----

inline std::filesystem::path cache_dir() {
    if (const char* d = std::getenv("TYV_CACHE_DIR"); d && *d) return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "tyv";
    if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "tyv";
    return std::filesystem::temp_directory_path() / "tyv-cache";
}

inline nlohmann::ordered_json k_to_json(const K& x) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (int i = 0; i < 4; ++i) a.push_back({x[i].num_str(), x[i].den_str()});
    return a;
}

/// eta table and bracket table of one ChevalleyData, as exact K entries.
inline nlohmann::ordered_json structure_constants_json(const ChevalleyData& cd) {
    nlohmann::ordered_json j;
    j["family"] = std::string(1, cd.type().family);
    j["rank"] = cd.type().rank;
    j["normalization"] = kNormalization;
    j["version"] = kVersion;
    nlohmann::ordered_json eta = nlohmann::ordered_json::array();
    std::vector<RootVec> roots;
    for (const auto& r : cd.roots().positive()) {
        roots.push_back(r);
        RootVec m = r;
        for (int& c : m) c = -c;
        roots.push_back(m);
    }
    for (const auto& a : roots)
        for (const auto& b : roots) {
            K v = cd.eta(a, b);
            if (!v.is_zero()) eta.push_back({{"a", a}, {"b", b}, {"eta", k_to_json(v)}});
        }
    j["eta"] = std::move(eta);
    nlohmann::ordered_json br = nlohmann::ordered_json::array();
    for (int a = 0; a < cd.dim(); ++a)
        for (int b = 0; b < cd.dim(); ++b)
            for (const auto& [c, v] : cd.bracket(a, b)) br.push_back({a, b, c, k_to_json(v)});
    j["bracket"] = std::move(br);
    return j;
}

enum class CacheState { Written, Matched, Rebuilt, Unavailable };

/// Advisory: the table is always rebuilt; a cached copy is compared and
/// replaced when it disagrees.
inline CacheState sync_structure_cache(const ChevalleyData& cd) {
    namespace fs = std::filesystem;
    nlohmann::ordered_json fresh = structure_constants_json(cd);
    std::error_code ec;
    fs::path dir = cache_dir();
    fs::create_directories(dir, ec);
    if (ec) return CacheState::Unavailable;
    fs::path file = dir / (cd.type().name() + "-v" + kVersion + ".json");
    CacheState state = CacheState::Written;
    if (std::ifstream in(file); in) {
        try {
            nlohmann::ordered_json old = nlohmann::ordered_json::parse(in);
            if (old == fresh) return CacheState::Matched;
        } catch (const std::exception&) {
        }
        state = CacheState::Rebuilt;
    }
    std::ofstream out(file);
    if (!out) return CacheState::Unavailable;
    out << fresh.dump() << "\n";
    return out ? state : CacheState::Unavailable;
}

// ---- suites ----

inline std::shared_ptr<const ChevalleyData> chevalley(const std::string& type) {
    auto cd = std::make_shared<const ChevalleyData>(LieType::parse(type));
    if (sync_structure_cache(*cd) == CacheState::Rebuilt)
        std::fprintf(stderr, "tyv: cached structure constants for %s disagreed and were rewritten\n", cd->type().name().c_str());
    return cd;
}

inline std::vector<CheckItem> prefixed(std::vector<CheckItem> items, const std::string& prefix) {
    if (prefix.empty()) return items;
    for (auto& it : items) it.id = prefix + it.id;
    return items;
}

inline std::vector<CheckItem> classical_suite_items(const std::string& type, const SuiteConfig& cfg) {
    auto cd = chevalley(type);
    auto tc = std::make_shared<const TwistedCurrent>(cd, cfg.zdeg);
    std::vector<CheckItem> items = root_data_items(cd);
    for (auto& it : presentation_items(tc, cfg.mutation)) items.push_back(std::move(it));
    auto chain = cfg.zdeg >= cfg.window ? tc : std::make_shared<const TwistedCurrent>(cd, cfg.window);
    for (auto& it : derivation_chain_items(chain, cfg.window)) items.push_back(std::move(it));
    return items;
}

inline std::vector<CheckItem> embedding_suite_items(const std::string& type, const SuiteConfig& cfg, bool casimir) {
    auto e = std::make_shared<const Embedding>(chevalley(type), cfg.mutation);
    return casimir ? casimir_items(e) : embedding_items(e);
}

/// Builds the report for one configuration without running anything twice.
inline CheckReport run_suite(const SuiteConfig& cfg) {
    cfg.validate();
    CheckReport rep;
    rep.suite = cfg.suite;
    std::vector<CheckItem> items;
    std::vector<std::string> types_used;

    auto typed = [&](const std::string& suite, const std::vector<std::string>& defaults, bool label_suite) {
        std::vector<std::string> types = cfg.type ? std::vector<std::string>{LieType::parse(*cfg.type).name()} : defaults;
        bool label_type = types.size() > 1;
        for (const auto& t : types) {
            std::vector<CheckItem> part = suite == "classical" ? classical_suite_items(t, cfg)
                                                               : embedding_suite_items(t, cfg, suite == "casimir");
            std::string prefix = (label_suite ? suite + "/" : "") + (label_type ? t + "/" : "");
            for (auto& it : prefixed(std::move(part), prefix)) items.push_back(std::move(it));
            if (std::find(types_used.begin(), types_used.end(), t) == types_used.end()) types_used.push_back(t);
        }
    };
    auto rank_one = [&](const std::string& suite, bool label_suite) {
        std::vector<CheckItem> part = suite == "rank1" ? rank_one_items({cfg.rank1_order(), cfg.maxidx}, cfg.mutation)
                                                       : rtt_items({cfg.rtt_order()});
        for (auto& it : prefixed(std::move(part), label_suite ? suite + "/" : "")) items.push_back(std::move(it));
        if (std::find(types_used.begin(), types_used.end(), "A1") == types_used.end()) types_used.push_back("A1");
    };

    const bool all = cfg.suite == "all";
    if (all || cfg.suite == "classical") typed("classical", classical_types(), all);
    if (all || cfg.suite == "embedding") typed("embedding", embedding_types(), all);
    if (all || cfg.suite == "casimir") typed("casimir", embedding_types(), all);
    if (!cfg.type || all) {
        if (all || cfg.suite == "rank1") rank_one("rank1", all);
        if (all || cfg.suite == "rtt") rank_one("rtt", all);
    } else if (cfg.suite == "rank1" || cfg.suite == "rtt") {
        rank_one(cfg.suite, false);
    }

    for (const auto& t : types_used) rep.lie_type += (rep.lie_type.empty() ? "" : ",") + t;
    const bool only_rank_one = cfg.suite == "rank1" || cfg.suite == "rtt";
    rep.normalization = only_rank_one ? kRankOneNormalization : kNormalization;

    auto& p = rep.params;
    if (!only_rank_one) {
        p["zdeg"] = cfg.zdeg;
        if (cfg.suite == "classical" || all) p["window"] = cfg.window;
    }
    if (cfg.suite == "rank1" || all) {
        p["order"] = cfg.rank1_order();
        p["maxidx"] = cfg.maxidx;
    }
    if (cfg.suite == "rtt" || all) p[all ? "rtt_order" : "order"] = cfg.rtt_order();
    p["mutation"] = cfg.mutation.str();

    rep.items = run_items(items, cfg.jobs);
    return rep;
}

/// Root data summary for `tyv roots`.
inline nlohmann::ordered_json roots_json(const ChevalleyData& cd) {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["lie_type"] = cd.type().name();
    j["normalization"] = kNormalization;
    const RootSystem& rs = cd.roots();
    nlohmann::ordered_json gram = nlohmann::ordered_json::array();
    for (int i = 0; i < cd.rank(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int k = 0; k < cd.rank(); ++k) row.push_back(rs.gram(i, k));
        gram.push_back(row);
    }
    j["gram"] = gram;
    nlohmann::ordered_json d = nlohmann::ordered_json::array();
    for (int i = 0; i < cd.rank(); ++i) d.push_back(rs.d(i));
    j["d"] = d;
    j["dimension"] = cd.dim();
    nlohmann::ordered_json pos = nlohmann::ordered_json::array();
    for (const auto& r : rs.positive()) pos.push_back(r);
    j["positive_roots"] = pos;
    return j;
}

}  // namespace tyv
