#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cot/policies.hpp"
#include "cot/resizer.hpp"
#include "cot/workload.hpp"

namespace cot {

enum class RunMode : std::uint8_t {
    HitRateSweep,
    ImbalanceSearch,
    ResizeTrace,
    TrackerSweep,
};

std::string_view to_string(RunMode m);

struct ConfigError : std::runtime_error {
    ConfigError(std::size_t line, const std::string& msg)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
          line_number(line) {}
    std::size_t line_number;
};

struct ExperimentConfig {
    RunMode mode = RunMode::HitRateSweep;

    WorkloadSpec workload;
    std::optional<WorkloadSpec> workload2;  // mid-run swap target
    std::uint64_t swap_at = 0;              // per-front-end accesses before the swap
    std::uint64_t total_accesses = 2'000'000;

    std::vector<PolicyKind> policies = {PolicyKind::LRU, PolicyKind::LFU,
                                        PolicyKind::ARC, PolicyKind::LRU2,
                                        PolicyKind::CoT};
    std::vector<double> skews = {0.9, 0.99, 1.2};
    std::vector<std::uint64_t> cache_line_sweep = {2,    4,    8,   16,  32,  64, 128,
                                                   256,  512,  1024};
    std::vector<std::uint64_t> tracker_line_sweep;  // tracker_sweep mode
    std::uint64_t cache_lines = 512;
    std::uint64_t tracker_lines = 0;  // 0 = per-skew ratio default
    std::uint64_t tracker_ratio = 0;  // 0 = paper ratio by skew (16/8/4)

    std::uint32_t front_ends = 20;
    std::uint32_t shards = 8;
    std::uint32_t vnodes = 16384;

    ResizerConfig resizer;
    std::uint64_t initial_cache = 2;
    std::uint64_t initial_tracker = 4;
    std::uint64_t epoch_size = 5000;
    std::uint32_t stop_after_holds = 0;  // resize_trace: stop once this many
                                         // consecutive holds accumulate (0 = run out)

    std::uint64_t seed = 1;
    std::string out_prefix = "cot";
};

// Flat key = value format with [section] headers; '#' starts a comment.
// Unknown keys, duplicate keys, and malformed values are line-numbered errors.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// Clamp/override helpers used by the CLI.
void apply_paper_scale(ExperimentConfig& cfg);

// The paper's tracker-to-cache ratios per skew: 16:1 below s=0.95, 8:1 below
// s=1.1, else 4:1; uniform uses 4:1.
std::uint64_t default_tracker_ratio(const WorkloadSpec& w);

std::optional<PolicyKind> policy_from_name(std::string_view name);

}  // namespace cot
