#include <doctest.h>

#include "cot/hotness.hpp"
#include "cot/workload.hpp"

using namespace cot;

TEST_SUITE("hotness") {

TEST_CASE("eq1 values") {
    HotnessWeights unit;
    CHECK(hotness({0, 0}, unit) == 0);
    CHECK(hotness({3, 1}, unit) == 2);
    CHECK(hotness({5, 2}, {2, 1}) == 8);
}

TEST_CASE("update-heavy keys go negative") {
    CHECK(hotness({1, 5}, {1, 1}) == -4);
    CHECK(hotness({0, 3}, {1, 2}) == -6);
}

TEST_CASE("no overflow at the stated bounds") {
    HotnessEntry e{1ULL << 40, 0};
    HotnessWeights w{1ULL << 10, 1ULL << 10};
    CHECK(hotness(e, w) == static_cast<Hotness>(1) << 50);
    HotnessEntry u{0, 1ULL << 40};
    CHECK(hotness(u, w) == -(static_cast<Hotness>(1) << 50));
}

TEST_CASE("apply_access increments one counter") {
    HotnessEntry e{0, 0};
    e = apply_access(e, AccessType::Read);
    CHECK(e.read_count == 1);
    CHECK(e.update_count == 0);

    HotnessEntry f{4, 1};
    f = apply_access(f, AccessType::Update);
    CHECK(f.read_count == 4);
    CHECK(f.update_count == 2);
}

TEST_CASE("two-step composition matches eq1 on final counters") {
    HotnessEntry e{1, 0};
    e = apply_access(e, AccessType::Read);
    e = apply_access(e, AccessType::Update);
    CHECK(e.read_count == 2);
    CHECK(e.update_count == 1);
    CHECK(hotness(e, {1, 1}) == 1);
}

TEST_CASE("access deltas are exactly the weights") {
    SplitMix64 rng(99);
    for (int i = 0; i < 200; ++i) {
        HotnessEntry e{rng.next() % 100000, rng.next() % 100000};
        HotnessWeights w{1 + rng.next() % 1000, 1 + rng.next() % 1000};
        Hotness before = hotness(e, w);
        CHECK(hotness(apply_access(e, AccessType::Read), w) - before ==
              static_cast<Hotness>(w.read_weight));
        CHECK(hotness(apply_access(e, AccessType::Update), w) - before ==
              -static_cast<Hotness>(w.update_weight));
    }
}

TEST_CASE("halving even counters preserves hotness ordering") {
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        HotnessWeights w{1 + rng.next() % 8, 1 + rng.next() % 8};
        HotnessEntry a{2 * (rng.next() % 50000), 2 * (rng.next() % 50000)};
        HotnessEntry b{2 * (rng.next() % 50000), 2 * (rng.next() % 50000)};
        Hotness ha = hotness(a, w), hb = hotness(b, w);
        HotnessEntry a2{a.read_count / 2, a.update_count / 2};
        HotnessEntry b2{b.read_count / 2, b.update_count / 2};
        Hotness ha2 = hotness(a2, w), hb2 = hotness(b2, w);
        if (ha < hb) CHECK(ha2 < hb2);
        if (ha == hb) CHECK(ha2 == hb2);
        if (ha > hb) CHECK(ha2 > hb2);
    }
}

}  // TEST_SUITE
