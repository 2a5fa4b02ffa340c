#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace cot {

// Per-epoch counters collected by the caller. cache_lines/tracker_lines are
// the capacities in force during the epoch (fleet totals when several
// symmetric front-ends feed one controller).
struct EpochStats {
    std::uint64_t epoch_index = 0;
    std::uint64_t accesses = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t tracker_only_hits = 0;  // key was in S_k but not S_c before the access
    std::vector<std::uint64_t> shard_lookups;
    std::uint64_t cache_lines = 0;
    std::uint64_t tracker_lines = 0;
};

struct DerivedSignals {
    double imbalance = 1.0;          // I_c = max load / max(1, min load)
    double alpha_cached = 0.0;       // cache hits per cache line
    double alpha_tracked_only = 0.0; // tracker-only hits per (K - C) line
};

// Requires stats.cache_lines >= 1 and stats.tracker_lines > stats.cache_lines.
DerivedSignals derive_signals(const EpochStats& stats);

enum class ResizePhase : std::uint8_t { RatioDiscovery, ImbalanceSearch, Steady };

enum class ResizeKind : std::uint8_t {
    DoubleBoth,
    HalveBoth,
    DoubleTracker,
    ShrinkTrackerBack,
    Decay,
    Hold,
};

std::string_view to_string(ResizeKind k);

// Every action carries the sizes to run with from the next epoch on.
struct ResizeAction {
    ResizeKind kind = ResizeKind::Hold;
    std::uint64_t cache_lines = 0;
    std::uint64_t tracker_lines = 0;
    std::uint64_t epoch_size = 0;
};

struct ResizerConfig {
    double target_imbalance = 1.1;  // I_t, the only administrator input
    double epsilon = 0.05;          // alpha slack
    double band = 0.02;             // no resize while I_c <= I_t * (1 + band)
    double gain_threshold = 0.05;   // ratio discovery stops below this relative gain
    std::uint32_t warmup_epochs = 5;
    std::uint64_t min_cache = 1;
    std::uint64_t min_tracker = 2;
};

// Epoch-driven controller: ratio discovery (grow the tracker while the hit
// rate still improves), imbalance search (double both until I_c meets I_t),
// then steady-state shrink/decay/hold driven by the alpha signals. A pure
// state machine; applying actions to a cache is the caller's job.
class Resizer {
public:
    Resizer(ResizerConfig cfg, std::uint64_t initial_cache = 2,
            std::uint64_t initial_tracker = 4, std::uint64_t epoch_size = 5000);

    ResizeAction end_epoch(const DerivedSignals& signals);

    // True exactly when access_count is a positive multiple of epoch_size.
    static bool epoch_boundary(std::uint64_t access_count, std::uint64_t epoch_size);

    ResizePhase phase() const { return phase_; }
    double alpha_target() const { return alpha_target_; }
    std::uint64_t cache_lines() const { return cache_lines_; }
    std::uint64_t tracker_lines() const { return tracker_lines_; }
    std::uint64_t epoch_size() const { return epoch_size_; }
    std::uint32_t warmup_remaining() const { return warmup_remaining_; }
    const ResizerConfig& config() const { return cfg_; }

private:
    ResizeAction hold() const;
    ResizeAction emit(ResizeKind kind, std::uint64_t new_cache, std::uint64_t new_tracker);
    bool imbalanced(const DerivedSignals& s) const;

    ResizerConfig cfg_;
    std::uint64_t cache_lines_;
    std::uint64_t tracker_lines_;
    std::uint64_t epoch_size_;
    ResizePhase phase_ = ResizePhase::RatioDiscovery;
    double alpha_target_ = 0.0;  // auto-set; 0 means unset
    bool alpha_refresh_pending_ = false;
    std::optional<double> discovery_alpha_;
    std::uint32_t warmup_remaining_ = 0;
};

}  // namespace cot
