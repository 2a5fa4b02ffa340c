#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cot/config.hpp"

namespace cot {

struct RunResult {
    std::vector<std::string> files;  // CSV paths written
    std::string summary;             // the table printed to stdout
};

// Per-access observer used by tests to recount hits independently:
// (front_end, key, type, hit).
using AccessObserver =
    std::function<void(std::uint32_t, Key, AccessType, bool)>;

// Runs the configured experiment and writes its CSV artifacts under out_dir.
// Deterministic for a fixed config, including across thread counts. Partial
// output files are removed when the run throws.
RunResult run_experiment(const ExperimentConfig& cfg, const std::string& out_dir,
                         const AccessObserver& observer = nullptr);

// Row payloads, exposed so tests can drive single points directly.

struct HitRateRow {
    PolicyKind policy;
    double skew = 0.0;  // 0 encodes uniform
    std::uint64_t cache_lines = 0;
    std::uint64_t tracker_lines = 0;
    std::uint64_t accesses = 0;
    std::uint64_t hits = 0;
    double hit_rate = 0.0;
};

struct ImbalanceRow {
    std::string policy;  // policy name, or "none" for the no-cache baseline
    double skew = 0.0;
    std::uint64_t cache_lines = 0;
    double imbalance = 0.0;      // whole-run cluster I_c
    double relative_load = 0.0;  // vs the no-cache baseline
    std::vector<std::uint64_t> shard_lookups;  // cumulative; not written to CSV
};

struct TraceRow {
    std::uint64_t epoch = 0;
    std::uint64_t cache_lines = 0;    // per-front-end
    std::uint64_t tracker_lines = 0;  // per-front-end
    std::uint64_t epoch_size = 0;
    double imbalance = 0.0;  // fleet-aggregated per-epoch I_c
    double alpha_cached = 0.0;
    double alpha_tracked_only = 0.0;
    double alpha_target = 0.0;
    ResizeKind action = ResizeKind::Hold;
};

// One hit-rate point: front_ends independent caches served round-robin.
HitRateRow run_hit_rate_point(const ExperimentConfig& cfg, PolicyKind policy,
                              const WorkloadSpec& workload, std::uint64_t cache_lines,
                              std::uint64_t tracker_lines,
                              const AccessObserver& observer = nullptr);

// One imbalance point; cache_lines == 0 means no front-end cache. A shared
// ring may be passed to avoid rebuilding it per point.
class HashRing;
ImbalanceRow run_imbalance_point(const ExperimentConfig& cfg, PolicyKind policy,
                                 const WorkloadSpec& workload,
                                 std::uint64_t cache_lines,
                                 std::uint64_t baseline_total_lookups,
                                 const HashRing* shared_ring = nullptr);

// The full resize trace: a fleet of front-ends sharing one controller fed by
// aggregated epoch signals.
std::vector<TraceRow> run_resize_trace(const ExperimentConfig& cfg);

std::uint64_t effective_tracker_lines(const ExperimentConfig& cfg,
                                      const WorkloadSpec& workload,
                                      std::uint64_t cache_lines);

}  // namespace cot
