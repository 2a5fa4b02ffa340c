#include "cot/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cot/cluster.hpp"
#include "cot/cot_cache.hpp"

namespace cot {

namespace {

constexpr std::uint64_t kValueSalt = 0xA24BAED4963EE407ULL;

Value backend_value(Key k) { return mix64(k.id ^ kValueSalt); }

// Shared exact-Zipf tables; building one for N=1M costs tens of ms, so sweep
// points reuse them.
class TableCache {
public:
    std::shared_ptr<const ZipfTable> get(std::uint64_t n, double s) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(n, s);
        auto it = tables_.find(key);
        if (it != tables_.end()) return it->second;
        auto table = std::make_shared<ZipfTable>(n, s);
        tables_[key] = table;
        return table;
    }

private:
    std::mutex mu_;
    std::map<std::pair<std::uint64_t, double>, std::shared_ptr<const ZipfTable>> tables_;
};

TableCache& table_cache() {
    static TableCache cache;
    return cache;
}

std::shared_ptr<const ZipfTable> table_for(const WorkloadSpec& w) {
    if (w.kind != WorkloadKind::Zipfian) return nullptr;
    return table_cache().get(w.keys, w.skew);
}

std::vector<std::uint64_t> split_accesses(std::uint64_t total, std::uint32_t front_ends) {
    std::vector<std::uint64_t> per(front_ends, total / front_ends);
    for (std::uint32_t i = 0; i < total % front_ends; ++i) ++per[i];
    return per;
}

double skew_column(const WorkloadSpec& w) {
    return w.kind == WorkloadKind::Zipfian ? w.skew : 0.0;
}

struct Fleet {
    std::vector<Generator> gens;
    std::vector<std::uint64_t> budget;
    std::vector<std::uint64_t> served;

    Fleet(const ExperimentConfig& cfg, const WorkloadSpec& w) {
        auto table = table_for(w);
        budget = split_accesses(cfg.total_accesses, cfg.front_ends);
        served.assign(cfg.front_ends, 0);
        gens.reserve(cfg.front_ends);
        for (std::uint32_t fe = 0; fe < cfg.front_ends; ++fe) {
            gens.emplace_back(w, cfg.seed ^ fe, table);
        }
    }
};

void write_or_throw(std::FILE* f, const std::string& path) {
    if (std::ferror(f)) throw std::runtime_error("failed writing " + path);
}

// Removes written files when a run dies part-way.
struct OutputGuard {
    std::vector<std::string> paths;
    bool armed = true;

    ~OutputGuard() {
        if (!armed) return;
        for (const auto& p : paths) {
            std::error_code ec;
            std::filesystem::remove(p, ec);
        }
    }
};

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_csv(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot open output file " + path);
    return FilePtr(f);
}

}  // namespace

std::uint64_t effective_tracker_lines(const ExperimentConfig& cfg,
                                      const WorkloadSpec& workload,
                                      std::uint64_t cache_lines) {
    if (cfg.tracker_lines > 0) return cfg.tracker_lines;
    std::uint64_t ratio = cfg.tracker_ratio > 0 ? cfg.tracker_ratio
                                                : default_tracker_ratio(workload);
    return std::max<std::uint64_t>(2, ratio * cache_lines);
}

HitRateRow run_hit_rate_point(const ExperimentConfig& cfg, PolicyKind policy,
                              const WorkloadSpec& workload, std::uint64_t cache_lines,
                              std::uint64_t tracker_lines, const AccessObserver& observer) {
    Fleet fleet(cfg, workload);
    std::uint64_t hits = 0;
    std::uint64_t total = 0;

    if (policy == PolicyKind::CoT) {
        std::vector<std::unique_ptr<CotCache>> caches;
        caches.reserve(cfg.front_ends);
        for (std::uint32_t fe = 0; fe < cfg.front_ends; ++fe) {
            caches.push_back(std::make_unique<CotCache>(cache_lines, tracker_lines));
        }
        CotCache::Backend backend = backend_value;
        std::uint64_t rounds = *std::max_element(fleet.budget.begin(), fleet.budget.end());
        for (std::uint64_t r = 0; r < rounds; ++r) {
            for (std::uint32_t fe = 0; fe < cfg.front_ends; ++fe) {
                if (fleet.served[fe] >= fleet.budget[fe]) continue;
                AccessEvent ev = fleet.gens[fe].next();
                ++fleet.served[fe];
                ++total;
                ServeOutcome out = caches[fe]->serve(ev.key, ev.type, backend);
                hits += out.cache_hit ? 1 : 0;
                if (observer) observer(fe, ev.key, ev.type, out.cache_hit);
            }
        }
    } else {
        PolicyConfig pc;
        pc.capacity = cache_lines;
        pc.history_size = tracker_lines;  // LRU2 ghost history; others ignore it
        std::vector<std::unique_ptr<Policy>> pols;
        pols.reserve(cfg.front_ends);
        for (std::uint32_t fe = 0; fe < cfg.front_ends; ++fe) {
            pols.push_back(make_policy(policy, pc));
        }
        std::uint64_t rounds = *std::max_element(fleet.budget.begin(), fleet.budget.end());
        for (std::uint64_t r = 0; r < rounds; ++r) {
            for (std::uint32_t fe = 0; fe < cfg.front_ends; ++fe) {
                if (fleet.served[fe] >= fleet.budget[fe]) continue;
                AccessEvent ev = fleet.gens[fe].next();
                ++fleet.served[fe];
                ++total;
                bool hit = false;
                if (ev.type == AccessType::Read) {
                    hit = pols[fe]->access(ev.key);
                    hits += hit ? 1 : 0;
                } else {
                    pols[fe]->erase(ev.key);
                }
                if (observer) observer(fe, ev.key, ev.type, hit);
            }
        }
    }

    HitRateRow row;
    row.policy = policy;
    row.skew = skew_column(workload);
    row.cache_lines = cache_lines;
    row.tracker_lines = (policy == PolicyKind::CoT || policy == PolicyKind::LRU2)
                            ? tracker_lines
                            : 0;
    row.accesses = total;
    row.hits = hits;
    row.hit_rate = total ? static_cast<double>(hits) / static_cast<double>(total) : 0.0;
    return row;
}

ImbalanceRow run_imbalance_point(const ExperimentConfig& cfg, PolicyKind policy,
                                 const WorkloadSpec& workload, std::uint64_t cache_lines,
                                 std::uint64_t baseline_total_lookups,
                                 const HashRing* shared_ring) {
    Fleet fleet(cfg, workload);
    std::unique_ptr<HashRing> own_ring;
    if (!shared_ring) {
        own_ring = std::make_unique<HashRing>(cfg.shards, cfg.vnodes);
        shared_ring = own_ring.get();
    }
    const HashRing& ring = *shared_ring;
    ShardLoad load(cfg.shards);

    std::uint64_t rounds = *std::max_element(fleet.budget.begin(), fleet.budget.end());
    std::uint64_t tracker_lines = effective_tracker_lines(cfg, workload, cache_lines);

    if (cache_lines == 0) {
        for (std::uint64_t r = 0; r < rounds; ++r) {
            for (std::uint32_t fe = 0; fe < cfg.front_ends; ++fe) {
                if (fleet.served[fe] >= fleet.budget[fe]) continue;
                AccessEvent ev = fleet.gens[fe].next();
                ++fleet.served[fe];
                load.record(ring.shard_for(ev.key));
            }
        }
    } else if (policy == PolicyKind::CoT) {
        std::vector<std::unique_ptr<CotCache>> caches;
        for (std::uint32_t fe = 0; fe < cfg.front_ends; ++fe) {
            caches.push_back(std::make_unique<CotCache>(cache_lines, tracker_lines));
        }
        CotCache::Backend backend = backend_value;
        for (std::uint64_t r = 0; r < rounds; ++r) {
            for (std::uint32_t fe = 0; fe < cfg.front_ends; ++fe) {
                if (fleet.served[fe] >= fleet.budget[fe]) continue;
                AccessEvent ev = fleet.gens[fe].next();
                ++fleet.served[fe];
                ServeOutcome out = caches[fe]->serve(ev.key, ev.type, backend);
                if (out.forwarded) load.record(ring.shard_for(ev.key));
            }
        }
    } else {
        PolicyConfig pc;
        pc.capacity = cache_lines;
        pc.history_size = tracker_lines;
        std::vector<std::unique_ptr<Policy>> pols;
        for (std::uint32_t fe = 0; fe < cfg.front_ends; ++fe) {
            pols.push_back(make_policy(policy, pc));
        }
        for (std::uint64_t r = 0; r < rounds; ++r) {
            for (std::uint32_t fe = 0; fe < cfg.front_ends; ++fe) {
                if (fleet.served[fe] >= fleet.budget[fe]) continue;
                AccessEvent ev = fleet.gens[fe].next();
                ++fleet.served[fe];
                bool forwarded = true;
                if (ev.type == AccessType::Read) {
                    forwarded = !pols[fe]->access(ev.key);
                } else {
                    pols[fe]->erase(ev.key);
                }
                if (forwarded) load.record(ring.shard_for(ev.key));
            }
        }
    }

    std::uint64_t hi = *std::max_element(load.cumulative.begin(), load.cumulative.end());
    std::uint64_t lo = *std::min_element(load.cumulative.begin(), load.cumulative.end());

    ImbalanceRow row;
    row.policy = cache_lines == 0 ? "none" : std::string(to_string(policy));
    row.skew = skew_column(workload);
    row.cache_lines = cache_lines;
    row.imbalance = static_cast<double>(hi) / static_cast<double>(std::max<std::uint64_t>(1, lo));
    std::uint64_t total_lookups = 0;
    for (std::uint64_t v : load.cumulative) total_lookups += v;
    row.relative_load = baseline_total_lookups
                            ? static_cast<double>(total_lookups) /
                                  static_cast<double>(baseline_total_lookups)
                            : 0.0;
    row.shard_lookups = load.cumulative;
    return row;
}

std::vector<TraceRow> run_resize_trace(const ExperimentConfig& cfg) {
    const std::uint32_t F = cfg.front_ends;
    HashRing ring(cfg.shards, cfg.vnodes);
    auto table1 = table_for(cfg.workload);
    std::shared_ptr<const ZipfTable> table2 =
        cfg.workload2 ? table_for(*cfg.workload2) : nullptr;

    Resizer resizer(cfg.resizer, cfg.initial_cache, cfg.initial_tracker, cfg.epoch_size);
    std::uint64_t cache_lines = resizer.cache_lines();
    std::uint64_t tracker_lines = resizer.tracker_lines();

    struct FrontEnd {
        Generator gen;
        std::unique_ptr<CotCache> cache;
        bool swapped = false;
    };
    std::vector<FrontEnd> fes;
    fes.reserve(F);
    for (std::uint32_t fe = 0; fe < F; ++fe) {
        fes.push_back(FrontEnd{Generator(cfg.workload, cfg.seed ^ fe, table1),
                               std::make_unique<CotCache>(cache_lines, tracker_lines),
                               false});
    }

    CotCache::Backend backend = backend_value;
    ShardLoad load(cfg.shards);
    std::uint64_t epoch_hits = 0, epoch_tracker_only = 0;
    std::uint64_t per_fe_budget = cfg.total_accesses / F;
    std::uint64_t epoch_index = 0;
    std::uint64_t rounds_in_epoch = 0;
    std::uint32_t consecutive_holds = 0;
    std::vector<TraceRow> rows;

    for (std::uint64_t round = 1; round <= per_fe_budget; ++round) {
        for (std::uint32_t i = 0; i < F; ++i) {
            FrontEnd& fe = fes[i];
            if (cfg.workload2 && !fe.swapped && round > cfg.swap_at) {
                fe.gen = Generator(*cfg.workload2, cfg.seed ^ i ^ 0x5157AEF39CD0A66BULL,
                                   table2);
                fe.swapped = true;
            }
            AccessEvent ev = fe.gen.next();
            ServeOutcome out = fe.cache->serve(ev.key, ev.type, backend);
            epoch_hits += out.cache_hit ? 1 : 0;
            epoch_tracker_only += (out.tracker_hit && !out.was_cached) ? 1 : 0;
            if (out.forwarded) load.record(ring.shard_for(ev.key));
        }
        ++rounds_in_epoch;

        if (!Resizer::epoch_boundary(round, resizer.epoch_size())) continue;

        ++epoch_index;
        EpochStats stats;
        stats.epoch_index = epoch_index;
        stats.accesses = static_cast<std::uint64_t>(F) * rounds_in_epoch;
        stats.cache_hits = epoch_hits;
        stats.tracker_only_hits = epoch_tracker_only;
        stats.shard_lookups = load.epoch;
        stats.cache_lines = F * cache_lines;
        stats.tracker_lines = F * tracker_lines;
        DerivedSignals signals = derive_signals(stats);
        ResizeAction action = resizer.end_epoch(signals);

        TraceRow row;
        row.epoch = epoch_index;
        row.cache_lines = cache_lines;
        row.tracker_lines = tracker_lines;
        row.epoch_size = resizer.epoch_size();
        row.imbalance = signals.imbalance;
        row.alpha_cached = signals.alpha_cached;
        row.alpha_tracked_only = signals.alpha_tracked_only;
        row.alpha_target = resizer.alpha_target();
        row.action = action.kind;
        rows.push_back(row);

        if (action.kind == ResizeKind::Decay) {
            for (auto& fe : fes) fe.cache->decay_half_life();
        } else if (action.cache_lines != cache_lines ||
                   action.tracker_lines != tracker_lines) {
            for (auto& fe : fes) fe.cache->resize(action.cache_lines, action.tracker_lines);
            cache_lines = action.cache_lines;
            tracker_lines = action.tracker_lines;
        }

        consecutive_holds = action.kind == ResizeKind::Hold ? consecutive_holds + 1 : 0;
        epoch_hits = 0;
        epoch_tracker_only = 0;
        rounds_in_epoch = 0;
        load.reset_epoch();

        bool swap_done = !cfg.workload2 || round > cfg.swap_at;
        if (cfg.stop_after_holds > 0 && swap_done &&
            consecutive_holds >= cfg.stop_after_holds) {
            break;
        }
    }
    return rows;
}

namespace {

void write_hitrate_csv(std::FILE* f, const std::string& path,
                       const std::vector<HitRateRow>& rows) {
    std::fputs("policy,skew,cache_lines,tracker_lines,accesses,hits,hit_rate\n", f);
    for (const auto& r : rows) {
        std::fprintf(f, "%s,%.6f,%llu,%llu,%llu,%llu,%.6f\n",
                     std::string(to_string(r.policy)).c_str(), r.skew,
                     static_cast<unsigned long long>(r.cache_lines),
                     static_cast<unsigned long long>(r.tracker_lines),
                     static_cast<unsigned long long>(r.accesses),
                     static_cast<unsigned long long>(r.hits), r.hit_rate);
    }
    write_or_throw(f, path);
}

void write_imbalance_csv(std::FILE* f, const std::string& path,
                         const std::vector<ImbalanceRow>& rows) {
    std::fputs("policy,skew,cache_lines,I_c,relative_load\n", f);
    for (const auto& r : rows) {
        std::fprintf(f, "%s,%.6f,%llu,%.6f,%.6f\n", r.policy.c_str(), r.skew,
                     static_cast<unsigned long long>(r.cache_lines), r.imbalance,
                     r.relative_load);
    }
    write_or_throw(f, path);
}

void write_trace_csv(std::FILE* f, const std::string& path,
                     const std::vector<TraceRow>& rows) {
    std::fputs("epoch,C,K,E,I_c,alpha_c,alpha_kc,alpha_t,action\n", f);
    for (const auto& r : rows) {
        std::fprintf(f, "%llu,%llu,%llu,%llu,%.6f,%.6f,%.6f,%.6f,%s\n",
                     static_cast<unsigned long long>(r.epoch),
                     static_cast<unsigned long long>(r.cache_lines),
                     static_cast<unsigned long long>(r.tracker_lines),
                     static_cast<unsigned long long>(r.epoch_size), r.imbalance,
                     r.alpha_cached, r.alpha_tracked_only, r.alpha_target,
                     std::string(to_string(r.action)).c_str());
    }
    write_or_throw(f, path);
}

std::vector<WorkloadSpec> sweep_workloads(const ExperimentConfig& cfg) {
    if (cfg.workload.kind != WorkloadKind::Zipfian || cfg.skews.empty()) {
        return {cfg.workload};
    }
    std::vector<WorkloadSpec> out;
    for (double s : cfg.skews) {
        WorkloadSpec w = cfg.workload;
        w.skew = s;
        out.push_back(w);
    }
    return out;
}

std::string run_hit_rate_sweep(const ExperimentConfig& cfg, const std::string& csv_path,
                               OutputGuard& guard, const AccessObserver& observer) {
    auto workloads = sweep_workloads(cfg);
    struct Point {
        PolicyKind policy;
        std::size_t workload;
        std::uint64_t cache_lines;
        std::uint64_t tracker_lines;
    };
    std::vector<Point> points;
    for (PolicyKind p : cfg.policies) {
        for (std::size_t wi = 0; wi < workloads.size(); ++wi) {
            for (std::uint64_t c : cfg.cache_line_sweep) {
                points.push_back(
                    {p, wi, c, effective_tracker_lines(cfg, workloads[wi], c)});
            }
        }
    }
    for (const auto& w : workloads) table_for(w);  // build shared tables up front

    std::vector<HitRateRow> rows(points.size());
#pragma omp parallel for schedule(dynamic) if (!observer)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i) {
        const Point& pt = points[i];
        rows[i] = run_hit_rate_point(cfg, pt.policy, workloads[pt.workload],
                                     pt.cache_lines, pt.tracker_lines, observer);
    }

    auto f = open_csv(csv_path);
    guard.paths.push_back(csv_path);
    write_hitrate_csv(f.get(), csv_path, rows);

    std::ostringstream summary;
    summary << "hit_rate_sweep: " << rows.size() << " points -> " << csv_path << "\n";
    for (const auto& r : rows) {
        summary << "  " << to_string(r.policy) << " skew=" << r.skew
                << " C=" << r.cache_lines << " hit_rate=" << r.hit_rate << "\n";
    }
    return summary.str();
}

std::string run_tracker_sweep(const ExperimentConfig& cfg, const std::string& csv_path,
                              OutputGuard& guard, const AccessObserver& observer) {
    auto workloads = sweep_workloads(cfg);
    struct Point {
        std::size_t workload;
        std::uint64_t tracker_lines;
    };
    std::vector<Point> points;
    for (std::size_t wi = 0; wi < workloads.size(); ++wi) {
        for (std::uint64_t k : cfg.tracker_line_sweep) points.push_back({wi, k});
    }
    for (const auto& w : workloads) table_for(w);

    std::vector<HitRateRow> rows(points.size());
#pragma omp parallel for schedule(dynamic) if (!observer)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i) {
        const Point& pt = points[i];
        rows[i] = run_hit_rate_point(cfg, PolicyKind::CoT, workloads[pt.workload],
                                     cfg.cache_lines, pt.tracker_lines, observer);
    }

    auto f = open_csv(csv_path);
    guard.paths.push_back(csv_path);
    write_hitrate_csv(f.get(), csv_path, rows);

    std::ostringstream summary;
    summary << "tracker_sweep: C=" << cfg.cache_lines << ", " << rows.size()
            << " points -> " << csv_path << "\n";
    for (const auto& r : rows) {
        summary << "  K=" << r.tracker_lines << " hit_rate=" << r.hit_rate << "\n";
    }
    return summary.str();
}

std::string run_imbalance_search(const ExperimentConfig& cfg, const std::string& csv_path,
                                 OutputGuard& guard) {
    auto workloads = sweep_workloads(cfg);
    for (const auto& w : workloads) table_for(w);
    HashRing ring(cfg.shards, cfg.vnodes);

    // Ascending sizes with early stop per (policy, workload) pair; pairs run
    // in parallel. The baseline row (no cache) is shared per workload.
    std::vector<std::uint64_t> sizes = cfg.cache_line_sweep;
    std::sort(sizes.begin(), sizes.end());

    std::vector<ImbalanceRow> baseline_rows(workloads.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t wi = 0; wi < static_cast<std::int64_t>(workloads.size()); ++wi) {
        baseline_rows[wi] = run_imbalance_point(cfg, PolicyKind::LRU, workloads[wi], 0,
                                                cfg.total_accesses, &ring);
    }

    struct Pair {
        PolicyKind policy;
        std::size_t workload;
    };
    std::vector<Pair> pairs;
    for (std::size_t wi = 0; wi < workloads.size(); ++wi) {
        for (PolicyKind p : cfg.policies) pairs.push_back({p, wi});
    }
    std::vector<std::vector<ImbalanceRow>> pair_rows(pairs.size());
    std::vector<std::uint64_t> minimum(pairs.size(), 0);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(pairs.size()); ++i) {
        const Pair& pr = pairs[i];
        for (std::uint64_t c : sizes) {
            ImbalanceRow row = run_imbalance_point(cfg, pr.policy, workloads[pr.workload],
                                                   c, cfg.total_accesses, &ring);
            pair_rows[i].push_back(row);
            if (row.imbalance <= cfg.resizer.target_imbalance) {
                minimum[i] = c;
                break;
            }
        }
    }

    std::vector<ImbalanceRow> rows;
    for (std::size_t wi = 0; wi < workloads.size(); ++wi) rows.push_back(baseline_rows[wi]);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (const auto& r : pair_rows[i]) rows.push_back(r);
    }

    auto f = open_csv(csv_path);
    guard.paths.push_back(csv_path);
    write_imbalance_csv(f.get(), csv_path, rows);

    std::ostringstream summary;
    summary << "imbalance_search (I_t=" << cfg.resizer.target_imbalance
            << "): minimum cache lines per policy -> " << csv_path << "\n";
    for (std::size_t wi = 0; wi < workloads.size(); ++wi) {
        summary << "  skew=" << skew_column(workloads[wi])
                << " no-cache I_c=" << baseline_rows[wi].imbalance << "\n";
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (pairs[i].workload != wi) continue;
            summary << "    " << to_string(pairs[i].policy) << ": ";
            if (minimum[i]) {
                summary << minimum[i] << "\n";
            } else {
                summary << "not reached\n";
            }
        }
    }
    return summary.str();
}

std::string run_trace_mode(const ExperimentConfig& cfg, const std::string& csv_path,
                           OutputGuard& guard) {
    std::vector<TraceRow> rows = run_resize_trace(cfg);
    auto f = open_csv(csv_path);
    guard.paths.push_back(csv_path);
    write_trace_csv(f.get(), csv_path, rows);

    std::ostringstream summary;
    summary << "resize_trace: " << rows.size() << " epochs -> " << csv_path << "\n";
    if (!rows.empty()) {
        const auto& last = rows.back();
        summary << "  terminal C=" << last.cache_lines << " K=" << last.tracker_lines
                << " I_c=" << last.imbalance << " action=" << to_string(last.action)
                << "\n";
    }
    return summary.str();
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg, const std::string& out_dir,
                         const AccessObserver& observer) {
    if (cfg.workload2 && cfg.mode != RunMode::ResizeTrace) {
        throw ConfigError(0, "mid-run workload swap is only supported in resize_trace");
    }

    std::filesystem::create_directories(out_dir);
    OutputGuard guard;
    RunResult result;

    std::string base = out_dir + "/" + cfg.out_prefix;
    switch (cfg.mode) {
        case RunMode::HitRateSweep: {
            std::string path = base + "_hitrate.csv";
            result.summary = run_hit_rate_sweep(cfg, path, guard, observer);
            break;
        }
        case RunMode::TrackerSweep: {
            std::string path = base + "_hitrate.csv";
            result.summary = run_tracker_sweep(cfg, path, guard, observer);
            break;
        }
        case RunMode::ImbalanceSearch: {
            std::string path = base + "_imbalance.csv";
            result.summary = run_imbalance_search(cfg, path, guard);
            break;
        }
        case RunMode::ResizeTrace: {
            std::string path = base + "_trace.csv";
            result.summary = run_trace_mode(cfg, path, guard);
            break;
        }
    }

    result.files = guard.paths;
    guard.armed = false;
    std::cout << result.summary;
    return result;
}

}  // namespace cot
