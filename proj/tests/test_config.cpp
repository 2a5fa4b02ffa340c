#include <doctest.h>

#include <string>

#include "cot/config.hpp"

using namespace cot;

namespace {

const char* kMinimal =
    "[workload]\n"
    "kind = zipfian\n"
    "skew = 0.99\n"
    "[run]\n"
    "mode = hit_rate_sweep\n";

}  // namespace

TEST_SUITE("config") {

TEST_CASE("minimal config fills the documented defaults") {
    ExperimentConfig cfg = parse_config(kMinimal);
    CHECK(cfg.front_ends == 20);
    CHECK(cfg.shards == 8);
    CHECK(cfg.workload.keys == 100000);
    CHECK(cfg.total_accesses == 2000000);
    CHECK(cfg.workload.read_ratio == doctest::Approx(0.998));
    CHECK(cfg.seed == 1);
    CHECK(cfg.mode == RunMode::HitRateSweep);
    CHECK(cfg.resizer.target_imbalance == doctest::Approx(1.1));
}

TEST_CASE("comments and blank lines are ignored") {
    ExperimentConfig cfg = parse_config(
        "# experiment\n"
        "[workload]\n"
        "kind = uniform   # flat\n"
        "\n"
        "[run]\n"
        "mode = hit_rate_sweep\n"
        "seed = 7\n");
    CHECK(cfg.workload.kind == WorkloadKind::Uniform);
    CHECK(cfg.seed == 7);
}

TEST_CASE("duplicate key errors carry the line number") {
    try {
        parse_config(
            "[workload]\n"
            "kind = zipfian\n"
            "kind = uniform\n"
            "[run]\n"
            "mode = hit_rate_sweep\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line_number == 3);
        CHECK(std::string(e.what()).find("duplicate key 'kind'") != std::string::npos);
    }
}

TEST_CASE("unknown key is an error") {
    CHECK_THROWS_AS(parse_config(
                        "[workload]\n"
                        "kind = zipfian\n"
                        "zipf = 0.99\n"
                        "[run]\n"
                        "mode = hit_rate_sweep\n"),
                    ConfigError);
}

TEST_CASE("unknown section is an error") {
    CHECK_THROWS_AS(parse_config("[labrador]\n"), ConfigError);
}

TEST_CASE("swap_at without a second workload is rejected") {
    CHECK_THROWS_AS(parse_config(
                        "[workload]\n"
                        "kind = zipfian\n"
                        "swap_at = 1000\n"
                        "[run]\n"
                        "mode = resize_trace\n"),
                    ConfigError);
}

TEST_CASE("second workload without swap_at is rejected") {
    CHECK_THROWS_AS(parse_config(
                        "[workload]\n"
                        "kind = zipfian\n"
                        "[workload2]\n"
                        "kind = uniform\n"
                        "[run]\n"
                        "mode = resize_trace\n"),
                    ConfigError);
}

TEST_CASE("missing mode is rejected") {
    CHECK_THROWS_AS(parse_config("[workload]\nkind = zipfian\n"), ConfigError);
}

TEST_CASE("malformed values name the line") {
    try {
        parse_config(
            "[workload]\n"
            "kind = zipfian\n"
            "keys = a-lot\n"
            "[run]\n"
            "mode = hit_rate_sweep\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line_number == 3);
    }
}

TEST_CASE("full trace config") {
    ExperimentConfig cfg = parse_config(
        "[workload]\n"
        "kind = zipfian\n"
        "skew = 1.2\n"
        "keys = 1000000\n"
        "accesses = 10000000\n"
        "swap_at = 750000\n"
        "[workload2]\n"
        "kind = uniform\n"
        "keys = 1000000\n"
        "[cluster]\n"
        "front_ends = 20\n"
        "shards = 8\n"
        "vnodes = 16384\n"
        "[resizer]\n"
        "target_imbalance = 1.1\n"
        "epoch = 5000\n"
        "initial_cache = 2\n"
        "initial_tracker = 4\n"
        "[run]\n"
        "mode = resize_trace\n"
        "seed = 42\n"
        "out = fig9\n");
    CHECK(cfg.mode == RunMode::ResizeTrace);
    CHECK(cfg.workload2.has_value());
    CHECK(cfg.workload2->kind == WorkloadKind::Uniform);
    CHECK(cfg.swap_at == 750000);
    CHECK(cfg.epoch_size == 5000);
    CHECK(cfg.out_prefix == "fig9");
}

TEST_CASE("paper scale override") {
    ExperimentConfig cfg = parse_config(kMinimal);
    apply_paper_scale(cfg);
    CHECK(cfg.workload.keys == 1000000);
    CHECK(cfg.total_accesses == 10000000);
}

TEST_CASE("tracker ratio defaults follow the per-skew table") {
    WorkloadSpec w;
    w.kind = WorkloadKind::Zipfian;
    w.skew = 0.9;
    CHECK(default_tracker_ratio(w) == 16);
    w.skew = 0.99;
    CHECK(default_tracker_ratio(w) == 8);
    w.skew = 1.2;
    CHECK(default_tracker_ratio(w) == 4);
    w.kind = WorkloadKind::Uniform;
    CHECK(default_tracker_ratio(w) == 4);
}

}  // TEST_SUITE
