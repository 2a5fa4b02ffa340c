#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cot/hotness.hpp"

namespace cot {

// SplitMix64: counter-based PRNG (state advances by the 64-bit golden ratio,
// output is the Stafford mix13 finalizer). Stable across platforms; streams
// are seeded per front-end as seed XOR front_end_id.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        return mix64(state);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class WorkloadKind : std::uint8_t { Zipfian, Uniform, HotSpot };

struct WorkloadSpec {
    WorkloadKind kind = WorkloadKind::Zipfian;
    double skew = 0.99;            // Zipfian s > 0
    std::uint64_t keys = 100000;   // N
    double read_ratio = 0.998;
    std::uint64_t hot_keys = 0;    // HotSpot only
    double hot_fraction = 0.0;     // HotSpot only
};

struct AccessEvent {
    Key key;  // rank-indexed: id 1 is the hottest rank
    AccessType type = AccessType::Read;
};

// Precomputed cumulative mass table for exact inverse-CDF Zipf sampling.
// P(rank r) = r^-s / H_{N,s}; sampling is a binary search, not the
// approximate rejection scheme.
class ZipfTable {
public:
    ZipfTable(std::uint64_t n, double s);

    std::uint64_t sample_rank(double u) const;  // u in [0,1) -> rank in [1,N]
    double cdf(std::uint64_t c) const;          // mass of the top-c ranks
    std::uint64_t keys() const { return static_cast<std::uint64_t>(cum_.size()); }
    double skew() const { return skew_; }

private:
    std::vector<double> cum_;
    double skew_;
};

// Sum_{r=1..C} r^-s / Sum_{r=1..N} r^-s.
double zipf_cdf(std::uint64_t n, double s, std::uint64_t c);

class Generator {
public:
    // A shared table may be passed to avoid rebuilding it per front-end;
    // it must match (spec.keys, spec.skew) for Zipfian specs.
    Generator(const WorkloadSpec& spec, std::uint64_t seed,
              std::shared_ptr<const ZipfTable> table = nullptr);

    AccessEvent next();

    const WorkloadSpec& spec() const { return spec_; }

private:
    WorkloadSpec spec_;
    SplitMix64 rng_;
    std::shared_ptr<const ZipfTable> table_;
};

}  // namespace cot
