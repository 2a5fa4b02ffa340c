#include "cot/workload.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cot {

ZipfTable::ZipfTable(std::uint64_t n, double s) : skew_(s) {
    if (n == 0) throw std::invalid_argument("zipf table: key space must be >= 1");
    cum_.resize(n);
    long double total = 0.0L;
    for (std::uint64_t r = 1; r <= n; ++r) {
        total += powl(static_cast<long double>(r), static_cast<long double>(-s));
        cum_[r - 1] = static_cast<double>(total);
    }
    for (double& c : cum_) c /= static_cast<double>(total);
    cum_.back() = 1.0;
}

std::uint64_t ZipfTable::sample_rank(double u) const {
    auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
    if (it == cum_.end()) --it;
    return static_cast<std::uint64_t>(it - cum_.begin()) + 1;
}

double ZipfTable::cdf(std::uint64_t c) const {
    if (c == 0) return 0.0;
    return cum_[std::min<std::uint64_t>(c, cum_.size()) - 1];
}

double zipf_cdf(std::uint64_t n, double s, std::uint64_t c) {
    if (n == 0 || c == 0 || c > n) {
        throw std::invalid_argument("zipf_cdf: requires 1 <= C <= N");
    }
    long double head = 0.0L, total = 0.0L;
    for (std::uint64_t r = 1; r <= n; ++r) {
        total += powl(static_cast<long double>(r), static_cast<long double>(-s));
        if (r == c) head = total;
    }
    return static_cast<double>(head / total);
}

Generator::Generator(const WorkloadSpec& spec, std::uint64_t seed,
                     std::shared_ptr<const ZipfTable> table)
    : spec_(spec), rng_(seed), table_(std::move(table)) {
    if (spec_.keys == 0) throw std::invalid_argument("workload: key space must be >= 1");
    if (spec_.kind == WorkloadKind::Zipfian) {
        if (!table_) table_ = std::make_shared<ZipfTable>(spec_.keys, spec_.skew);
        if (table_->keys() != spec_.keys || table_->skew() != spec_.skew) {
            throw std::invalid_argument("workload: zipf table does not match spec");
        }
    }
    if (spec_.kind == WorkloadKind::HotSpot) {
        if (spec_.hot_keys == 0 || spec_.hot_keys >= spec_.keys ||
            spec_.hot_fraction <= 0.0 || spec_.hot_fraction >= 1.0) {
            throw std::invalid_argument("workload: hotspot needs 0 < hot_fraction < 1 "
                                        "and 1 <= hot_keys < keys");
        }
    }
}

AccessEvent Generator::next() {
    std::uint64_t rank = 1;
    switch (spec_.kind) {
        case WorkloadKind::Zipfian:
            rank = table_->sample_rank(rng_.next_u01());
            break;
        case WorkloadKind::Uniform: {
            double u = rng_.next_u01();
            rank = 1 + std::min<std::uint64_t>(
                           spec_.keys - 1,
                           static_cast<std::uint64_t>(u * static_cast<double>(spec_.keys)));
            break;
        }
        case WorkloadKind::HotSpot: {
            bool hot = rng_.next_u01() < spec_.hot_fraction;
            double u = rng_.next_u01();
            if (hot) {
                rank = 1 + std::min<std::uint64_t>(
                               spec_.hot_keys - 1,
                               static_cast<std::uint64_t>(u * static_cast<double>(spec_.hot_keys)));
            } else {
                std::uint64_t cold = spec_.keys - spec_.hot_keys;
                rank = spec_.hot_keys + 1 +
                       std::min<std::uint64_t>(
                           cold - 1, static_cast<std::uint64_t>(u * static_cast<double>(cold)));
            }
            break;
        }
    }
    AccessType type =
        rng_.next_u01() < spec_.read_ratio ? AccessType::Read : AccessType::Update;
    return {Key{rank}, type};
}

}  // namespace cot
