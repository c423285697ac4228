#pragma once

#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "doors.hpp"
#include "grid.hpp"
#include "rooms.hpp"

namespace organic {

struct BuildingMetrics {
    int room_count = 0;
    std::vector<int> room_areas;  // one per placed room, measured on the final plan
    double avg_room_area = 0.0;
    int interior_door_count = 0;  // entrance not included
    bool connected_before_repair = false;
    int repairs_applied = 0;
    double generation_time = 0.0;  // seconds

    // Equality ignores timing.
    friend bool operator==(const BuildingMetrics& a, const BuildingMetrics& b) {
        return a.room_count == b.room_count && a.room_areas == b.room_areas &&
               a.avg_room_area == b.avg_room_area &&
               a.interior_door_count == b.interior_door_count &&
               a.connected_before_repair == b.connected_before_repair &&
               a.repairs_applied == b.repairs_applied;
    }
};

/// Per-building measurements from the finished plan. `report` is whatever
/// repair_connectivity (or connected_components, if repair is off) returned.
inline BuildingMetrics measure_building(const FloorGrid& plan, std::span<const Room> rooms,
                                        const ConnectivityReport& report, double elapsed) {
    BuildingMetrics m;
    m.room_count = static_cast<int>(rooms.size());
    for (const Room& r : rooms) {
        int area = 0;
        plan.for_each([&](Coord, const Tile& t) { area += t.is_room(r.id); });
        m.room_areas.push_back(area);
    }
    if (!m.room_areas.empty())
        m.avg_room_area = static_cast<double>(std::accumulate(m.room_areas.begin(),
                                                              m.room_areas.end(), 0)) /
                          static_cast<double>(m.room_areas.size());
    m.interior_door_count = static_cast<int>(plan.count(TileKind::Door));
    m.repairs_applied = report.repairs_applied;
    m.connected_before_repair = report.repairs_applied == 0 && report.component_count <= 1;
    m.generation_time = elapsed;
    return m;
}

inline nlohmann::json metrics_to_json(const BuildingMetrics& m) {
    return {
        {"room_count", m.room_count},
        {"room_areas", m.room_areas},
        {"avg_room_area", m.avg_room_area},
        {"interior_door_count", m.interior_door_count},
        {"connected_before_repair", m.connected_before_repair},
        {"repairs_applied", m.repairs_applied},
        {"generation_time_s", m.generation_time},
    };
}

struct Estimate {
    double mean = 0.0;
    double half_width = 0.0;  // 95% normal-approximation half width
};

/// Mean and 1.96 * s / sqrt(n), s with the n - 1 denominator. A single
/// sample has zero half width.
inline Estimate confidence_interval(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("confidence_interval: no samples");
    const auto n = static_cast<double>(samples.size());
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
    if (samples.size() == 1) return {mean, 0.0};
    double ss = 0.0;
    for (double s : samples) ss += (s - mean) * (s - mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    return {mean, 1.96 * sd / std::sqrt(n)};
}

}  // namespace organic
