#include "cot/resizer.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cot {

DerivedSignals derive_signals(const EpochStats& stats) {
    if (stats.cache_lines < 1 || stats.tracker_lines <= stats.cache_lines) {
        throw std::invalid_argument("derive_signals: requires C >= 1 and K > C");
    }
    DerivedSignals s;
    if (!stats.shard_lookups.empty()) {
        std::uint64_t hi = *std::max_element(stats.shard_lookups.begin(),
                                             stats.shard_lookups.end());
        std::uint64_t lo = *std::min_element(stats.shard_lookups.begin(),
                                             stats.shard_lookups.end());
        s.imbalance = static_cast<double>(hi) /
                      static_cast<double>(std::max<std::uint64_t>(1, lo));
    }
    s.alpha_cached = static_cast<double>(stats.cache_hits) /
                     static_cast<double>(stats.cache_lines);
    s.alpha_tracked_only =
        static_cast<double>(stats.tracker_only_hits) /
        static_cast<double>(stats.tracker_lines - stats.cache_lines);
    return s;
}

std::string_view to_string(ResizeKind k) {
    switch (k) {
        case ResizeKind::DoubleBoth: return "double_both";
        case ResizeKind::HalveBoth: return "halve_both";
        case ResizeKind::DoubleTracker: return "double_tracker";
        case ResizeKind::ShrinkTrackerBack: return "shrink_tracker_back";
        case ResizeKind::Decay: return "decay";
        case ResizeKind::Hold: return "hold";
    }
    return "hold";
}

Resizer::Resizer(ResizerConfig cfg, std::uint64_t initial_cache,
                 std::uint64_t initial_tracker, std::uint64_t epoch_size)
    : cfg_(cfg),
      cache_lines_(std::max(initial_cache, cfg.min_cache)),
      tracker_lines_(std::max(initial_tracker, cfg.min_tracker)) {
    tracker_lines_ = std::max(tracker_lines_, 2 * cache_lines_);
    epoch_size_ = std::max(epoch_size, tracker_lines_);
}

bool Resizer::epoch_boundary(std::uint64_t access_count, std::uint64_t epoch_size) {
    return access_count > 0 && epoch_size > 0 && access_count % epoch_size == 0;
}

ResizeAction Resizer::hold() const {
    return {ResizeKind::Hold, cache_lines_, tracker_lines_, epoch_size_};
}

ResizeAction Resizer::emit(ResizeKind kind, std::uint64_t new_cache,
                           std::uint64_t new_tracker) {
    cache_lines_ = std::max(new_cache, cfg_.min_cache);
    tracker_lines_ = std::max({new_tracker, cfg_.min_tracker, 2 * cache_lines_});
    if (kind != ResizeKind::Decay) {
        epoch_size_ = std::max(epoch_size_, tracker_lines_);
    }
    warmup_remaining_ = cfg_.warmup_epochs;
    return {kind, cache_lines_, tracker_lines_, epoch_size_};
}

bool Resizer::imbalanced(const DerivedSignals& s) const {
    return s.imbalance > cfg_.target_imbalance * (1.0 + cfg_.band);
}

ResizeAction Resizer::end_epoch(const DerivedSignals& s) {
    if (warmup_remaining_ > 0) {
        --warmup_remaining_;
        return hold();
    }

    switch (phase_) {
        case ResizePhase::RatioDiscovery: {
            if (!discovery_alpha_.has_value()) {
                discovery_alpha_ = s.alpha_cached;
                return emit(ResizeKind::DoubleTracker, cache_lines_, 2 * tracker_lines_);
            }
            double base = std::max(*discovery_alpha_, 1e-12);
            double gain = (s.alpha_cached - *discovery_alpha_) / base;
            if (gain >= cfg_.gain_threshold) {
                discovery_alpha_ = s.alpha_cached;
                return emit(ResizeKind::DoubleTracker, cache_lines_, 2 * tracker_lines_);
            }
            // The last doubling bought nothing; undo it and move on.
            discovery_alpha_.reset();
            phase_ = ResizePhase::ImbalanceSearch;
            return emit(ResizeKind::ShrinkTrackerBack, cache_lines_, tracker_lines_ / 2);
        }

        case ResizePhase::ImbalanceSearch: {
            if (imbalanced(s)) {
                alpha_target_ = s.alpha_cached;
                alpha_refresh_pending_ = true;
                return emit(ResizeKind::DoubleBoth, 2 * cache_lines_, 2 * tracker_lines_);
            }
            // Target met. Record the quality of the cached keys at the size
            // that achieved it; a balance confirmation reached without any
            // expansion (the shrink path) keeps the previous target.
            if (alpha_refresh_pending_ || alpha_target_ == 0.0) {
                alpha_target_ = s.alpha_cached;
                alpha_refresh_pending_ = false;
            }
            phase_ = ResizePhase::Steady;
            return hold();
        }

        case ResizePhase::Steady: {
            if (imbalanced(s)) {
                phase_ = ResizePhase::ImbalanceSearch;
                alpha_target_ = s.alpha_cached;
                alpha_refresh_pending_ = true;
                return emit(ResizeKind::DoubleBoth, 2 * cache_lines_, 2 * tracker_lines_);
            }
            double bar = (1.0 - cfg_.epsilon) * alpha_target_;
            bool cached_low = s.alpha_cached < bar;
            bool tracked_low = s.alpha_tracked_only < bar;
            if (cached_low && tracked_low) {
                std::uint64_t new_cache = std::max(cache_lines_ / 2, cfg_.min_cache);
                // Shrink resets the tracker-to-cache ratio to 2:1 and re-runs
                // ratio discovery once; subsequent shrinks at 2:1 halve directly.
                std::uint64_t new_tracker = std::max(2 * new_cache, cfg_.min_tracker);
                if (new_cache == cache_lines_ && new_tracker == tracker_lines_) {
                    return hold();  // already at the floors
                }
                if (tracker_lines_ > 2 * cache_lines_) {
                    phase_ = ResizePhase::RatioDiscovery;
                    discovery_alpha_.reset();
                }
                return emit(ResizeKind::HalveBoth, new_cache, new_tracker);
            }
            if (cached_low && !tracked_low) {
                warmup_remaining_ = cfg_.warmup_epochs;
                return {ResizeKind::Decay, cache_lines_, tracker_lines_, epoch_size_};
            }
            return hold();
        }
    }
    return hold();
}

}  // namespace cot
