#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "assembly.hpp"
#include "config.hpp"
#include "doors.hpp"
#include "facade.hpp"
#include "grid.hpp"
#include "metrics.hpp"
#include "rng.hpp"
#include "rooms.hpp"

namespace organic {

struct GeneratedBuilding {
    GenerationConfig config;
    std::uint64_t seed = 0;
    std::vector<Room> rooms;
    ConnectivityReport before_repair;
    ConnectivityReport connectivity;  // final
    BuildingModel model;
    BuildingMetrics metrics;
};

struct PlanResult {
    FloorGrid grid;
    std::vector<Room> rooms;
    ConnectivityReport before_repair;
    ConnectivityReport connectivity;
};

/// Floor-plan stages only: placement, growth, doors, repair, entrance. Each
/// stage draws from its own sub-stream of `seed`.
inline PlanResult generate_plan(const GenerationConfig& config, std::uint64_t seed) {
    config.validate();
    PlanResult out;
    out.grid = new_grid(config.width, config.depth);

    auto place_rng = RngStream::derive(seed, "place");
    out.rooms = place_rooms(out.grid, config.rooms.resolve(config.width, config.depth), place_rng,
                            config.max_attempts);
    check_invariants(out.grid, "placement");

    auto grow_rng = RngStream::derive(seed, "grow");
    grow_rooms(out.grid, out.rooms, grow_rng);
    check_invariants(out.grid, "growth");

    wallify_leftovers(out.grid);
    auto door_rng = RngStream::derive(seed, "doors");
    place_doors(out.grid, out.rooms, door_rng, config.doors);
    check_invariants(out.grid, "doors");

    out.before_repair = connected_components(out.grid);
    if (config.repair) {
        auto repair_rng = RngStream::derive(seed, "repair");
        out.connectivity = repair_connectivity(out.grid, out.rooms, repair_rng);
        check_invariants(out.grid, "repair");
    } else {
        out.connectivity = out.before_repair;
    }

    auto entrance_rng = RngStream::derive(seed, "entrance");
    place_exterior_door(out.grid, entrance_rng);
    check_invariants(out.grid, "entrance");
    return out;
}

/// Whole building: plan, facades, voxel assembly, metrics.
inline GeneratedBuilding generate_building(const GenerationConfig& config, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    PlanResult plan = generate_plan(config, seed);
    auto facades = generate_facades(config.width, config.depth, config.height, config.ca,
                                    derive_seed(seed, "facades"));
    GeneratedBuilding b;
    b.config = config;
    b.seed = seed;
    b.model = assemble(plan.grid, facades, config.height);
    b.rooms = std::move(plan.rooms);
    b.before_repair = std::move(plan.before_repair);
    b.connectivity = std::move(plan.connectivity);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    b.metrics = measure_building(b.model.plan, b.rooms, b.connectivity, elapsed.count());
    return b;
}

inline nlohmann::json export_json(const GeneratedBuilding& b) {
    return export_json(b.model, ExportContext{b.config, b.seed, metrics_to_json(b.metrics)});
}

}  // namespace organic
