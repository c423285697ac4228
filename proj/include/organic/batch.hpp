#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "metrics.hpp"
#include "pipeline.hpp"

namespace organic {

struct BatchSummary {
    int n = 0;
    GenerationConfig config;
    std::uint64_t master_seed = 0;
    Estimate avg_room_area;
    Estimate door_count;
    double pre_repair_connectivity_rate = 0.0;
    double post_repair_connectivity_rate = 0.0;  // flood fill on the final plan
    int total_repairs = 0;
    double total_time = 0.0;  // seconds, wall clock for the whole batch
};

struct BatchResult {
    BatchSummary summary;
    std::vector<BuildingMetrics> buildings;  // by index
};

class BatchError : public GenerationError {
public:
    BatchError(int index, std::uint64_t seed, const std::string& what)
        : GenerationError("batch", "building " + std::to_string(index) + " (seed " +
                                       std::to_string(seed) + "): " + what),
          index_(index),
          seed_(seed) {}

    int index() const noexcept { return index_; }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    int index_;
    std::uint64_t seed_;
};

inline std::uint64_t building_seed(std::uint64_t master_seed, int index) {
    return derive_seed(master_seed, "building", static_cast<std::uint64_t>(index));
}

/// Generate `n` buildings with `build(config, seed) -> GeneratedBuilding`.
/// Building i uses building_seed(master_seed, i), so results do not depend on
/// `workers`; aggregation runs in index order. The first failing index (not
/// the first to fail in time) is reported.
template <typename BuildFn>
BatchResult run_batch_with(const GenerationConfig& config, int n, std::uint64_t master_seed,
                           unsigned workers, BuildFn&& build) {
    if (n < 1) throw ValidationError("batch size must be >= 1");
    config.validate();
    workers = std::clamp(workers, 1u, static_cast<unsigned>(n));

    BatchResult result;
    result.buildings.resize(static_cast<std::size_t>(n));
    std::vector<char> connected_after(static_cast<std::size_t>(n), 0);

    std::atomic<int> next{0};
    std::mutex error_mutex;
    int error_index = n;
    std::string error_what;

    const auto start = std::chrono::steady_clock::now();
    auto work = [&] {
        for (int i = next++; i < n; i = next++) {
            const auto seed = building_seed(master_seed, i);
            try {
                GeneratedBuilding b = build(config, seed);
                connected_after[static_cast<std::size_t>(i)] =
                    connected_components(b.model.plan).component_count == 1;
                result.buildings[static_cast<std::size_t>(i)] = std::move(b.metrics);
            } catch (const std::exception& e) {
                std::lock_guard lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error_what = e.what();
                }
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (error_index < n) throw BatchError(error_index, building_seed(master_seed, error_index), error_what);

    BatchSummary& s = result.summary;
    s.n = n;
    s.config = config;
    s.master_seed = master_seed;
    std::vector<double> areas;
    std::vector<double> doors;
    int connected_before = 0;
    int connected_final = 0;
    for (std::size_t i = 0; i < result.buildings.size(); ++i) {
        const auto& m = result.buildings[i];
        areas.push_back(m.avg_room_area);
        doors.push_back(static_cast<double>(m.interior_door_count));
        connected_before += m.connected_before_repair;
        connected_final += connected_after[i];
        s.total_repairs += m.repairs_applied;
    }
    s.avg_room_area = confidence_interval(areas);
    s.door_count = confidence_interval(doors);
    s.pre_repair_connectivity_rate = connected_before / static_cast<double>(n);
    s.post_repair_connectivity_rate = connected_final / static_cast<double>(n);
    s.total_time = elapsed.count();
    return result;
}

inline BatchResult run_batch(const GenerationConfig& config, int n, std::uint64_t master_seed,
                             unsigned workers = 1) {
    return run_batch_with(config, n, master_seed, workers,
                          [](const GenerationConfig& c, std::uint64_t seed) {
                              return generate_building(c, seed);
                          });
}

inline nlohmann::json summary_to_json(const BatchSummary& s) {
    nlohmann::json config = config_to_json(s.config);
    config["seed"] = s.master_seed;
    return {
        {"schema_version", kSchemaVersion},
        {"kind", "batch_summary"},
        {"n", s.n},
        {"config", std::move(config)},
        {"avg_room_area", {{"mean", s.avg_room_area.mean}, {"ci95", s.avg_room_area.half_width}}},
        {"interior_door_count", {{"mean", s.door_count.mean}, {"ci95", s.door_count.half_width}}},
        {"pre_repair_connectivity_rate", s.pre_repair_connectivity_rate},
        {"post_repair_connectivity_rate", s.post_repair_connectivity_rate},
        {"total_repairs", s.total_repairs},
        {"total_time_s", s.total_time},
    };
}

/// Plain-text table. Timing is confined to the last line so runs can be
/// diffed with that line stripped.
inline std::string format_summary_table(const BatchSummary& s) {
    std::ostringstream out;
    char buf[128];
    auto row = [&](const char* label, const std::string& value) {
        std::snprintf(buf, sizeof buf, "%-30s %s\n", label, value.c_str());
        out << buf;
    };
    auto est = [&](const Estimate& e) {
        char v[64];
        std::snprintf(v, sizeof v, "%.3f +/- %.3f", e.mean, e.half_width);
        return std::string(v);
    };
    auto fixed = [&](double d) {
        char v[32];
        std::snprintf(v, sizeof v, "%.4f", d);
        return std::string(v);
    };
    row("buildings", std::to_string(s.n));
    row("dimensions", std::to_string(s.config.width) + "x" + std::to_string(s.config.depth) + "x" +
                          std::to_string(s.config.height));
    row("rooms", s.config.rooms.to_string());
    row("master seed", std::to_string(s.master_seed));
    row("avg room area (95% CI)", est(s.avg_room_area));
    row("interior doors (95% CI)", est(s.door_count));
    row("connected before repair", fixed(s.pre_repair_connectivity_rate));
    row("connected after repair", fixed(s.post_repair_connectivity_rate));
    row("repairs applied", std::to_string(s.total_repairs));
    row("total time (s)", fixed(s.total_time));
    return out.str();
}

}  // namespace organic
