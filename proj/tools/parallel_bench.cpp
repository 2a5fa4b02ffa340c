// Times a fixed hit-rate sweep with 1 OpenMP thread and with all available
// threads, and checks the two produce identical rows. Sweep points are
// independent, so the speedup should track the core count.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cot/harness.hpp"

namespace {

std::vector<cot::HitRateRow> run_sweep(const cot::ExperimentConfig& cfg) {
    std::vector<cot::HitRateRow> rows;
    for (cot::PolicyKind p : cfg.policies) {
        for (double s : cfg.skews) {
            cot::WorkloadSpec w = cfg.workload;
            w.skew = s;
            for (std::uint64_t c : cfg.cache_line_sweep) {
                rows.push_back(cot::run_hit_rate_point(
                    cfg, p, w, c, cot::effective_tracker_lines(cfg, w, c)));
            }
        }
    }
    return rows;
}

std::vector<cot::HitRateRow> run_sweep_parallel(const cot::ExperimentConfig& cfg) {
    struct Point {
        cot::PolicyKind policy;
        double skew;
        std::uint64_t cache_lines;
    };
    std::vector<Point> points;
    for (cot::PolicyKind p : cfg.policies) {
        for (double s : cfg.skews) {
            for (std::uint64_t c : cfg.cache_line_sweep) points.push_back({p, s, c});
        }
    }
    std::vector<cot::HitRateRow> rows(points.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i) {
        cot::WorkloadSpec w = cfg.workload;
        w.skew = points[i].skew;
        rows[i] = cot::run_hit_rate_point(
            cfg, points[i].policy, w, points[i].cache_lines,
            cot::effective_tracker_lines(cfg, w, points[i].cache_lines));
    }
    return rows;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    cot::ExperimentConfig cfg;
    cfg.mode = cot::RunMode::HitRateSweep;
    cfg.total_accesses = 400000;
    cfg.workload.keys = 50000;
    cfg.policies = {cot::PolicyKind::LRU, cot::PolicyKind::LFU, cot::PolicyKind::ARC,
                    cot::PolicyKind::LRU2, cot::PolicyKind::CoT};
    cfg.skews = {0.9, 0.99, 1.2};
    cfg.cache_line_sweep = {16, 64, 256};

    auto t0 = std::chrono::steady_clock::now();
    auto serial = run_sweep(cfg);
    double serial_s = seconds_since(t0);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    t0 = std::chrono::steady_clock::now();
    auto parallel = run_sweep_parallel(cfg);
    double parallel_s = seconds_since(t0);

    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i) {
        same = serial[i].hits == parallel[i].hits &&
               serial[i].accesses == parallel[i].accesses;
    }

    std::printf("points            : %zu\n", serial.size());
    std::printf("serial            : %.3f s\n", serial_s);
    std::printf("parallel (%2d thr) : %.3f s\n", threads, parallel_s);
    std::printf("speedup           : %.2fx\n", serial_s / parallel_s);
    std::printf("results identical : %s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
