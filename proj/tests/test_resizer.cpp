#include <doctest.h>

#include <vector>

#include "cot/resizer.hpp"
#include "cot/workload.hpp"

using namespace cot;

namespace {

DerivedSignals sig(double imbalance, double alpha_c, double alpha_kc) {
    return DerivedSignals{imbalance, alpha_c, alpha_kc};
}

// Feed hold-worthy balanced epochs until warm-up expires.
void drain_warmup(Resizer& r, const DerivedSignals& s) {
    while (r.warmup_remaining() > 0) {
        CHECK(r.end_epoch(s).kind == ResizeKind::Hold);
    }
}

// Walks a fresh resizer through ratio discovery and the imbalance search into
// the steady phase: one unproductive tracker doubling, then expansions until
// balanced. Returns it in Steady with alpha_target = steady_alpha.
Resizer steady_resizer(double steady_alpha, std::uint64_t c0 = 2, std::uint64_t k0 = 4) {
    Resizer r(ResizerConfig{}, c0, k0, 100);
    auto balanced = sig(1.0, steady_alpha, 0.1);
    CHECK(r.end_epoch(balanced).kind == ResizeKind::DoubleTracker);
    drain_warmup(r, balanced);
    CHECK(r.end_epoch(balanced).kind == ResizeKind::ShrinkTrackerBack);  // no gain
    drain_warmup(r, balanced);
    CHECK(r.phase() == ResizePhase::ImbalanceSearch);
    CHECK(r.end_epoch(balanced).kind == ResizeKind::Hold);  // target already met
    CHECK(r.phase() == ResizePhase::Steady);
    CHECK(r.alpha_target() == doctest::Approx(steady_alpha));
    return r;
}

}  // namespace

TEST_SUITE("resizer") {

TEST_CASE("derive_signals") {
    EpochStats s;
    s.cache_lines = 512;
    s.tracker_lines = 2048;
    s.cache_hits = 3900;
    s.tracker_only_hits = 150;
    s.shard_lookups = {5000, 1000};
    DerivedSignals d = derive_signals(s);
    CHECK(d.imbalance == doctest::Approx(5.0));
    CHECK(d.alpha_cached == doctest::Approx(3900.0 / 512.0));  // about 7.617
    CHECK(d.alpha_tracked_only == doctest::Approx(150.0 / 1536.0));

    s.shard_lookups = {300, 300, 300};
    CHECK(derive_signals(s).imbalance == doctest::Approx(1.0));

    s.shard_lookups = {10, 0};
    CHECK(derive_signals(s).imbalance == doctest::Approx(10.0));  // zero guard

    EpochStats bad;
    bad.cache_lines = 0;
    bad.tracker_lines = 4;
    CHECK_THROWS_AS(derive_signals(bad), std::invalid_argument);
}

TEST_CASE("epoch_boundary") {
    CHECK(Resizer::epoch_boundary(5000, 5000));
    CHECK(!Resizer::epoch_boundary(4999, 5000));
    CHECK(Resizer::epoch_boundary(10000, 5000));
    CHECK(!Resizer::epoch_boundary(0, 5000));
}

TEST_CASE("imbalance trigger doubles both from steady state") {
    Resizer r = steady_resizer(7.8);
    std::uint64_t c = r.cache_lines(), k = r.tracker_lines();
    ResizeAction a = r.end_epoch(sig(16.26, 7.8, 0.2));  // I_t = 1.5 scale in spec;
    CHECK(a.kind == ResizeKind::DoubleBoth);             // any I_c above band triggers
    CHECK(a.cache_lines == 2 * c);
    CHECK(a.tracker_lines == 2 * k);
}

TEST_CASE("steady holds when cached keys meet the target") {
    Resizer r = steady_resizer(7.8);
    ResizeAction a = r.end_epoch(sig(1.05, 7.9, 0.3));
    CHECK(a.kind == ResizeKind::Hold);
}

TEST_CASE("steady halves both when both alphas collapse") {
    Resizer r = steady_resizer(7.8, 8, 16);
    std::uint64_t c = r.cache_lines();
    ResizeAction a = r.end_epoch(sig(1.0, 1.0, 0.2));
    CHECK(a.kind == ResizeKind::HalveBoth);
    CHECK(a.cache_lines == c / 2);
    CHECK(a.tracker_lines == 2 * a.cache_lines);  // ratio reset to 2:1
}

TEST_CASE("steady decays when tracked-not-cached keys heat up") {
    Resizer r = steady_resizer(7.8);
    std::uint64_t c = r.cache_lines(), k = r.tracker_lines(), e = r.epoch_size();
    ResizeAction a = r.end_epoch(sig(1.0, 1.0, 7.7));
    CHECK(a.kind == ResizeKind::Decay);
    CHECK(a.cache_lines == c);
    CHECK(a.tracker_lines == k);
    CHECK(a.epoch_size == e);
}

TEST_CASE("warm-up separates non-hold actions by at least five epochs") {
    SplitMix64 rng(66);
    Resizer r(ResizerConfig{}, 2, 4, 50);
    int since_action = 1000;
    for (int i = 0; i < 3000; ++i) {
        DerivedSignals s = sig(1.0 + rng.next_u01() * rng.next_u01() * 4.0,
                               rng.next_u01() * 10.0, rng.next_u01() * 10.0);
        ResizeAction a = r.end_epoch(s);
        if (a.kind != ResizeKind::Hold) {
            CHECK(since_action >= 5);
            since_action = 0;
        } else {
            ++since_action;
        }
        CHECK(a.tracker_lines >= 2 * a.cache_lines);
        CHECK(a.epoch_size >= a.tracker_lines);
        CHECK(a.cache_lines >= 1);
        CHECK(a.tracker_lines >= 2);
        // capacity trajectory stays on powers of two of the floor
        CHECK((a.cache_lines & (a.cache_lines - 1)) == 0);
    }
}

TEST_CASE("branch guards follow the imbalance test") {
    SplitMix64 rng(91);
    Resizer r(ResizerConfig{}, 2, 4, 50);
    double threshold = 1.1 * 1.02;
    for (int i = 0; i < 3000; ++i) {
        DerivedSignals s = sig(1.0 + rng.next_u01() * 0.5, rng.next_u01() * 12.0,
                               rng.next_u01() * 12.0);
        ResizePhase phase = r.phase();
        ResizeAction a = r.end_epoch(s);
        if (a.kind == ResizeKind::DoubleBoth) {
            CHECK(s.imbalance > threshold);
            CHECK((phase == ResizePhase::ImbalanceSearch || phase == ResizePhase::Steady));
        }
        if (a.kind == ResizeKind::HalveBoth || a.kind == ResizeKind::Decay) {
            CHECK(s.imbalance <= threshold);
            CHECK(phase == ResizePhase::Steady);
        }
    }
}

TEST_CASE("bootstrap walk: discovery, expansion, steady") {
    ResizerConfig cfg;
    Resizer r(cfg, 2, 4, 5000);
    CHECK(r.phase() == ResizePhase::RatioDiscovery);

    // Discovery: alpha keeps improving by >= 5% for two doublings, then stalls.
    auto a1 = r.end_epoch(sig(5.0, 100.0, 1.0));
    CHECK(a1.kind == ResizeKind::DoubleTracker);
    CHECK(a1.tracker_lines == 8);
    drain_warmup(r, sig(5.0, 110.0, 1.0));
    auto a2 = r.end_epoch(sig(5.0, 110.0, 1.0));
    CHECK(a2.kind == ResizeKind::DoubleTracker);
    CHECK(a2.tracker_lines == 16);
    drain_warmup(r, sig(5.0, 111.0, 1.0));
    auto a3 = r.end_epoch(sig(5.0, 111.0, 1.0));  // below the 5% bar
    CHECK(a3.kind == ResizeKind::ShrinkTrackerBack);
    CHECK(a3.tracker_lines == 8);
    CHECK(r.phase() == ResizePhase::ImbalanceSearch);

    // Expansion until balanced; alpha_target re-records on entering steady.
    drain_warmup(r, sig(5.0, 100.0, 1.0));
    auto a4 = r.end_epoch(sig(5.0, 100.0, 1.0));
    CHECK(a4.kind == ResizeKind::DoubleBoth);
    CHECK(a4.cache_lines == 4);
    CHECK(a4.tracker_lines == 16);
    drain_warmup(r, sig(1.0, 60.0, 1.0));
    auto a5 = r.end_epoch(sig(1.0, 60.0, 1.0));
    CHECK(a5.kind == ResizeKind::Hold);
    CHECK(r.phase() == ResizePhase::Steady);
    CHECK(r.alpha_target() == doctest::Approx(60.0));
}

TEST_CASE("shrink cascade keeps the old alpha target and reaches the floors") {
    Resizer r = steady_resizer(7.8, 64, 256);  // ratio 4:1
    CHECK(r.cache_lines() == 64);

    auto dead = sig(1.0, 0.01, 0.005);

    // First collapse: halve with ratio reset and one rediscovery round.
    auto a = r.end_epoch(dead);
    CHECK(a.kind == ResizeKind::HalveBoth);
    CHECK(a.cache_lines == 32);
    CHECK(a.tracker_lines == 64);
    CHECK(r.phase() == ResizePhase::RatioDiscovery);
    CHECK(r.alpha_target() == doctest::Approx(7.8));

    drain_warmup(r, dead);
    CHECK(r.end_epoch(dead).kind == ResizeKind::DoubleTracker);
    drain_warmup(r, dead);
    CHECK(r.end_epoch(dead).kind == ResizeKind::ShrinkTrackerBack);
    drain_warmup(r, dead);
    CHECK(r.end_epoch(dead).kind == ResizeKind::Hold);  // into steady, target kept
    CHECK(r.alpha_target() == doctest::Approx(7.8));

    // Ratio is 2:1 now: subsequent collapses halve directly, no rediscovery.
    int halvings = 0;
    for (int i = 0; i < 400 && r.cache_lines() > 1; ++i) {
        ResizeAction act = r.end_epoch(dead);
        if (act.kind == ResizeKind::HalveBoth) {
            ++halvings;
            CHECK(r.phase() == ResizePhase::Steady);
        }
    }
    CHECK(r.cache_lines() == 1);
    CHECK(r.tracker_lines() == 2);
    CHECK(halvings == 5);  // 32 -> 16 -> 8 -> 4 -> 2 -> 1

    // At the floors the controller just holds.
    for (int i = 0; i < 10; ++i) {
        CHECK(r.end_epoch(dead).kind == ResizeKind::Hold);
    }
}

TEST_CASE("steady imbalance fallback re-records alpha on the next balance") {
    Resizer r = steady_resizer(7.8);
    auto a = r.end_epoch(sig(2.0, 7.8, 0.2));
    CHECK(a.kind == ResizeKind::DoubleBoth);
    CHECK(r.phase() == ResizePhase::ImbalanceSearch);
    drain_warmup(r, sig(1.0, 4.4, 0.2));
    CHECK(r.end_epoch(sig(1.0, 4.4, 0.2)).kind == ResizeKind::Hold);
    CHECK(r.phase() == ResizePhase::Steady);
    CHECK(r.alpha_target() == doctest::Approx(4.4));  // refreshed after expansion
}

}  // TEST_SUITE
