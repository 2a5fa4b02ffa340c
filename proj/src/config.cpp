#include "cot/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace cot {

std::string_view to_string(RunMode m) {
    switch (m) {
        case RunMode::HitRateSweep: return "hit_rate_sweep";
        case RunMode::ImbalanceSearch: return "imbalance_search";
        case RunMode::ResizeTrace: return "resize_trace";
        case RunMode::TrackerSweep: return "tracker_sweep";
    }
    return "hit_rate_sweep";
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::uint64_t parse_u64(const std::string& v, std::size_t line) {
    std::uint64_t out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size()) {
        throw ConfigError(line, "expected an unsigned integer, got '" + v + "'");
    }
    return out;
}

double parse_f64(const std::string& v, std::size_t line) {
    try {
        std::size_t pos = 0;
        double out = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return out;
    } catch (...) {
        throw ConfigError(line, "expected a number, got '" + v + "'");
    }
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

PolicyKind parse_policy(const std::string& v, std::size_t line) {
    if (auto k = policy_from_name(v)) return *k;
    throw ConfigError(line, "unknown policy '" + v + "'");
}

WorkloadKind parse_kind(const std::string& v, std::size_t line) {
    if (v == "zipfian") return WorkloadKind::Zipfian;
    if (v == "uniform") return WorkloadKind::Uniform;
    if (v == "hotspot") return WorkloadKind::HotSpot;
    throw ConfigError(line, "unknown workload kind '" + v + "'");
}

RunMode parse_mode(const std::string& v, std::size_t line) {
    if (v == "hit_rate_sweep") return RunMode::HitRateSweep;
    if (v == "imbalance_search") return RunMode::ImbalanceSearch;
    if (v == "resize_trace") return RunMode::ResizeTrace;
    if (v == "tracker_sweep") return RunMode::TrackerSweep;
    throw ConfigError(line, "unknown mode '" + v + "'");
}

struct WorkloadSection {
    bool seen = false;
    WorkloadSpec spec;
};

}  // namespace

std::optional<PolicyKind> policy_from_name(std::string_view name) {
    if (name == "lru") return PolicyKind::LRU;
    if (name == "lfu") return PolicyKind::LFU;
    if (name == "arc") return PolicyKind::ARC;
    if (name == "lru2") return PolicyKind::LRU2;
    if (name == "perfect") return PolicyKind::Perfect;
    if (name == "cot") return PolicyKind::CoT;
    return std::nullopt;
}

std::uint64_t default_tracker_ratio(const WorkloadSpec& w) {
    if (w.kind != WorkloadKind::Zipfian) return 4;
    if (w.skew < 0.95) return 16;
    if (w.skew < 1.1) return 8;
    return 4;
}

void apply_paper_scale(ExperimentConfig& cfg) {
    cfg.workload.keys = 1'000'000;
    if (cfg.workload2) cfg.workload2->keys = 1'000'000;
    cfg.total_accesses = 10'000'000;
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    WorkloadSection w1, w2;
    bool mode_seen = false;

    std::string section;
    std::set<std::string> seen_keys;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(line_no, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            static const std::set<std::string> known = {
                "workload", "workload2", "policy", "cluster", "resizer", "run"};
            if (!known.count(section)) {
                throw ConfigError(line_no, "unknown section '" + section + "'");
            }
            if (section == "workload") w1.seen = true;
            if (section == "workload2") w2.seen = true;
            continue;
        }

        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(line_no, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(line_no, "empty key");
        if (value.empty()) throw ConfigError(line_no, "empty value for '" + key + "'");
        if (section.empty()) throw ConfigError(line_no, "key '" + key + "' outside any section");

        std::string qualified = section + "." + key;
        if (!seen_keys.insert(qualified).second) {
            throw ConfigError(line_no, "duplicate key '" + key + "' in [" + section + "]");
        }

        if (section == "workload" || section == "workload2") {
            WorkloadSection& w = (section == "workload") ? w1 : w2;
            if (key == "kind") w.spec.kind = parse_kind(value, line_no);
            else if (key == "skew") w.spec.skew = parse_f64(value, line_no);
            else if (key == "keys") w.spec.keys = parse_u64(value, line_no);
            else if (key == "read_ratio") w.spec.read_ratio = parse_f64(value, line_no);
            else if (key == "hot_keys") w.spec.hot_keys = parse_u64(value, line_no);
            else if (key == "hot_fraction") w.spec.hot_fraction = parse_f64(value, line_no);
            else if (key == "accesses" && section == "workload")
                cfg.total_accesses = parse_u64(value, line_no);
            else if (key == "swap_at" && section == "workload")
                cfg.swap_at = parse_u64(value, line_no);
            else throw ConfigError(line_no, "unknown key '" + key + "' in [" + section + "]");
        } else if (section == "policy") {
            if (key == "kind") {
                cfg.policies = {parse_policy(value, line_no)};
            } else if (key == "policies") {
                cfg.policies.clear();
                for (const auto& p : split_list(value)) {
                    cfg.policies.push_back(parse_policy(p, line_no));
                }
            } else if (key == "cache_lines") {
                cfg.cache_lines = parse_u64(value, line_no);
            } else if (key == "tracker_lines") {
                cfg.tracker_lines = parse_u64(value, line_no);
            } else if (key == "tracker_ratio") {
                cfg.tracker_ratio = parse_u64(value, line_no);
            } else {
                throw ConfigError(line_no, "unknown key '" + key + "' in [policy]");
            }
        } else if (section == "cluster") {
            if (key == "front_ends") cfg.front_ends = static_cast<std::uint32_t>(parse_u64(value, line_no));
            else if (key == "shards") cfg.shards = static_cast<std::uint32_t>(parse_u64(value, line_no));
            else if (key == "vnodes") cfg.vnodes = static_cast<std::uint32_t>(parse_u64(value, line_no));
            else throw ConfigError(line_no, "unknown key '" + key + "' in [cluster]");
        } else if (section == "resizer") {
            if (key == "target_imbalance") cfg.resizer.target_imbalance = parse_f64(value, line_no);
            else if (key == "epsilon") cfg.resizer.epsilon = parse_f64(value, line_no);
            else if (key == "band") cfg.resizer.band = parse_f64(value, line_no);
            else if (key == "gain_threshold") cfg.resizer.gain_threshold = parse_f64(value, line_no);
            else if (key == "warmup_epochs") cfg.resizer.warmup_epochs = static_cast<std::uint32_t>(parse_u64(value, line_no));
            else if (key == "min_cache") cfg.resizer.min_cache = parse_u64(value, line_no);
            else if (key == "min_tracker") cfg.resizer.min_tracker = parse_u64(value, line_no);
            else if (key == "epoch") cfg.epoch_size = parse_u64(value, line_no);
            else if (key == "initial_cache") cfg.initial_cache = parse_u64(value, line_no);
            else if (key == "initial_tracker") cfg.initial_tracker = parse_u64(value, line_no);
            else throw ConfigError(line_no, "unknown key '" + key + "' in [resizer]");
        } else if (section == "run") {
            if (key == "mode") {
                cfg.mode = parse_mode(value, line_no);
                mode_seen = true;
            } else if (key == "seed") {
                cfg.seed = parse_u64(value, line_no);
            } else if (key == "out") {
                cfg.out_prefix = value;
            } else if (key == "stop_after_holds") {
                cfg.stop_after_holds = static_cast<std::uint32_t>(parse_u64(value, line_no));
            } else if (key == "skews") {
                cfg.skews.clear();
                for (const auto& s : split_list(value)) cfg.skews.push_back(parse_f64(s, line_no));
            } else if (key == "cache_line_sweep") {
                cfg.cache_line_sweep.clear();
                for (const auto& s : split_list(value)) cfg.cache_line_sweep.push_back(parse_u64(s, line_no));
            } else if (key == "tracker_line_sweep") {
                cfg.tracker_line_sweep.clear();
                for (const auto& s : split_list(value)) cfg.tracker_line_sweep.push_back(parse_u64(s, line_no));
            } else {
                throw ConfigError(line_no, "unknown key '" + key + "' in [run]");
            }
        }
    }

    if (!w1.seen) throw ConfigError(0, "missing [workload] section");
    if (!mode_seen) throw ConfigError(0, "missing run.mode");
    cfg.workload = w1.spec;
    if (w2.seen) cfg.workload2 = w2.spec;

    if (cfg.swap_at > 0 && !cfg.workload2) {
        throw ConfigError(0, "workload.swap_at set but no [workload2] section");
    }
    if (cfg.workload2 && cfg.swap_at == 0) {
        throw ConfigError(0, "[workload2] present but workload.swap_at missing");
    }
    if (cfg.front_ends == 0) throw ConfigError(0, "cluster.front_ends must be positive");
    if (cfg.shards == 0) throw ConfigError(0, "cluster.shards must be positive");
    if (cfg.vnodes == 0) throw ConfigError(0, "cluster.vnodes must be positive");
    if (cfg.total_accesses == 0) throw ConfigError(0, "workload.accesses must be positive");
    if (cfg.workload.read_ratio < 0.0 || cfg.workload.read_ratio > 1.0) {
        throw ConfigError(0, "workload.read_ratio must be in [0, 1]");
    }
    bool needs_sweep = cfg.mode == RunMode::HitRateSweep || cfg.mode == RunMode::ImbalanceSearch;
    if (needs_sweep && cfg.cache_line_sweep.empty()) {
        throw ConfigError(0, "run.cache_line_sweep must be non-empty for sweep modes");
    }
    if (cfg.mode == RunMode::TrackerSweep && cfg.tracker_line_sweep.empty()) {
        throw ConfigError(0, "run.tracker_line_sweep must be non-empty for tracker_sweep");
    }
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace cot
