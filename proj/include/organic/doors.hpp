#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grid.hpp"
#include "rng.hpp"
#include "rooms.hpp"

namespace organic {

// Axis along which a door lets you walk through it.
enum class Axis : std::uint8_t { X, Z };

constexpr Coord step(Axis a) { return a == Axis::X ? Coord{1, 0} : Coord{0, 1}; }
constexpr Axis perpendicular(Axis a) { return a == Axis::X ? Axis::Z : Axis::X; }

struct DoorSite {
    Coord position;
    Axis axis = Axis::X;
    Tile before;  // tile at position - step(axis)
    Tile after;   // tile at position + step(axis)

    friend bool operator==(const DoorSite&, const DoorSite&) = default;
};

// Sweep: every (interior tile, axis) pair is visited once in shuffled order
// and gets a door if legal at that moment. FixedPoint: keep drawing uniformly
// from the current legal sites until none remain.
enum class DoorPass : std::uint8_t { Sweep, FixedPoint };

struct DoorRules {
    // Whether an exterior wall satisfies "next to at least one other wall".
    bool exterior_walls_count = true;
    DoorPass pass = DoorPass::Sweep;

    friend bool operator==(const DoorRules&, const DoorRules&) = default;
};

struct ConnectivityReport {
    int component_count = 0;
    std::vector<std::vector<Coord>> components;  // largest first
    int repairs_applied = 0;
};

/// Interior tiles never claimed by a room become interior walls.
inline void wallify_leftovers(FloorGrid& grid) {
    for (int z = 1; z < grid.depth() - 1; ++z)
        for (int x = 1; x < grid.width() - 1; ++x)
            if (grid.at({x, z}).kind == TileKind::Empty) grid.set({x, z}, Tile::interior_wall());
}

namespace detail {

inline bool joins_rooms(const Tile& a, const Tile& b) {
    const bool a_ok = a.is_room() || a.kind == TileKind::Door;
    const bool b_ok = b.is_room() || b.kind == TileKind::Door;
    if (!a_ok || !b_ok) return false;
    if (a.kind == TileKind::Door || b.kind == TileKind::Door) return true;
    return a.room != b.room;
}

inline bool next_to_wall(const FloorGrid& grid, Coord c, const DoorRules& rules) {
    for (Coord n : grid.neighbors(c)) {
        TileKind k = grid.at(n).kind;
        if (k == TileKind::InteriorWall) return true;
        if (k == TileKind::ExteriorWall && rules.exterior_walls_count) return true;
    }
    return false;
}

inline std::optional<DoorSite> site_at(const FloorGrid& grid, Coord c, Axis axis,
                                       const DoorRules& rules) {
    if (grid.at(c).kind != TileKind::InteriorWall) return std::nullopt;
    Coord a = c - step(axis);
    Coord b = c + step(axis);
    if (!grid.in_bounds(a) || !grid.in_bounds(b)) return std::nullopt;
    if (!joins_rooms(grid.at(a), grid.at(b))) return std::nullopt;
    if (!next_to_wall(grid, c, rules)) return std::nullopt;
    return DoorSite{c, axis, grid.at(a), grid.at(b)};
}

inline void remove_room_tile(std::span<Room> rooms, int id, Coord c) {
    for (Room& r : rooms)
        if (r.id == id) r.tiles.erase(c);
}

// Turn `c` into a door; room tiles on both sides across the passage become
// interior walls. Exterior walls and existing doors are left as they are.
inline void open_door(FloorGrid& grid, std::span<Room> rooms, Coord c, Axis axis) {
    grid.set(c, Tile::door());
    Coord side = step(perpendicular(axis));
    for (Coord flank : {c - side, c + side}) {
        if (!grid.in_bounds(flank)) continue;
        const Tile t = grid.at(flank);
        if (!t.is_room()) continue;
        grid.set(flank, Tile::interior_wall());
        remove_room_tile(rooms, t.room, flank);
    }
}

}  // namespace detail

/// Every (interior wall, axis) pair where a door would sit between two
/// different rooms, or between a room and a door, and still touch a wall.
inline std::string_view door_pass_name(DoorPass p) {
    return p == DoorPass::Sweep ? "sweep" : "fixed-point";
}

inline DoorPass parse_door_pass(std::string_view text) {
    if (text == "sweep") return DoorPass::Sweep;
    if (text == "fixed-point") return DoorPass::FixedPoint;
    throw ValidationError("door pass must be 'sweep' or 'fixed-point', got '" + std::string(text) +
                          "'");
}

inline std::vector<DoorSite> legal_door_sites(const FloorGrid& grid, const DoorRules& rules = {}) {
    std::vector<DoorSite> sites;
    for (int z = 1; z < grid.depth() - 1; ++z) {
        for (int x = 1; x < grid.width() - 1; ++x) {
            for (Axis axis : {Axis::X, Axis::Z}) {
                if (auto s = detail::site_at(grid, {x, z}, axis, rules)) sites.push_back(*s);
            }
        }
    }
    return sites;
}

// Called with the grid as it was just before each door is placed.
using DoorObserver = std::function<void(const FloorGrid& before, const DoorSite& chosen)>;

/// Place interior doors; legality is always judged against the grid as it is
/// at that moment. Returns the number of doors placed.
inline int place_doors(FloorGrid& grid, std::vector<Room>& rooms, RngStream& rng,
                       const DoorRules& rules = {}, const DoorObserver& observer = {}) {
    int placed = 0;
    if (rules.pass == DoorPass::Sweep) {
        std::vector<std::pair<Coord, Axis>> order;
        for (int z = 1; z < grid.depth() - 1; ++z)
            for (int x = 1; x < grid.width() - 1; ++x)
                for (Axis axis : {Axis::X, Axis::Z}) order.emplace_back(Coord{x, z}, axis);
        rng.shuffle(std::span<std::pair<Coord, Axis>>(order));
        for (const auto& [c, axis] : order) {
            auto site = detail::site_at(grid, c, axis, rules);
            if (!site) continue;
            if (observer) observer(grid, *site);
            detail::open_door(grid, rooms, c, axis);
            ++placed;
        }
        return placed;
    }
    for (;;) {
        auto sites = legal_door_sites(grid, rules);
        if (sites.empty()) break;
        const DoorSite& chosen = rng.pick(std::span<const DoorSite>(sites));
        if (observer) observer(grid, chosen);
        detail::open_door(grid, rooms, chosen.position, chosen.axis);
        ++placed;
    }
    return placed;
}

/// Flood fill over room, door and entrance tiles using 4-adjacency.
inline ConnectivityReport connected_components(const FloorGrid& grid) {
    ConnectivityReport report;
    std::vector<char> seen(static_cast<std::size_t>(grid.area()), 0);
    auto idx = [&](Coord c) {
        return static_cast<std::size_t>(c.z) * static_cast<std::size_t>(grid.width()) +
               static_cast<std::size_t>(c.x);
    };
    grid.for_each([&](Coord start, const Tile& t) {
        if (!t.is_passable() || seen[idx(start)]) return;
        std::vector<Coord> component;
        std::deque<Coord> queue{start};
        seen[idx(start)] = 1;
        while (!queue.empty()) {
            Coord c = queue.front();
            queue.pop_front();
            component.push_back(c);
            for (Coord n : grid.neighbors(c)) {
                if (seen[idx(n)] || !grid.at(n).is_passable()) continue;
                seen[idx(n)] = 1;
                queue.push_back(n);
            }
        }
        std::sort(component.begin(), component.end());
        report.components.push_back(std::move(component));
    });
    std::stable_sort(report.components.begin(), report.components.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    report.component_count = static_cast<int>(report.components.size());
    return report;
}

/// While the plan is split, punch a door through an interior wall that has
/// different components on opposite sides. Throws when components are only
/// ever separated by walls two or more tiles thick.
inline ConnectivityReport repair_connectivity(FloorGrid& grid, std::vector<Room>& rooms,
                                              RngStream& rng) {
    int repairs = 0;
    for (;;) {
        ConnectivityReport report = connected_components(grid);
        if (report.component_count <= 1) {
            report.repairs_applied = repairs;
            return report;
        }
        std::vector<int> label(static_cast<std::size_t>(grid.area()), -1);
        auto idx = [&](Coord c) {
            return static_cast<std::size_t>(c.z) * static_cast<std::size_t>(grid.width()) +
                   static_cast<std::size_t>(c.x);
        };
        for (std::size_t i = 0; i < report.components.size(); ++i)
            for (Coord c : report.components[i]) label[idx(c)] = static_cast<int>(i);

        std::vector<std::pair<Coord, Axis>> bridges;
        for (int z = 1; z < grid.depth() - 1; ++z) {
            for (int x = 1; x < grid.width() - 1; ++x) {
                Coord c{x, z};
                if (grid.at(c).kind != TileKind::InteriorWall) continue;
                for (Axis axis : {Axis::X, Axis::Z}) {
                    Coord a = c - step(axis);
                    Coord b = c + step(axis);
                    int la = label[idx(a)];
                    int lb = label[idx(b)];
                    if (la >= 0 && lb >= 0 && la != lb) bridges.emplace_back(c, axis);
                }
            }
        }
        if (bridges.empty())
            throw GenerationError("repair", "components are separated by walls at least two tiles "
                                            "thick; connectivity cannot be restored");
        const auto& [where, axis] = rng.pick(std::span<const std::pair<Coord, Axis>>(bridges));
        detail::open_door(grid, rooms, where, axis);
        ++repairs;
    }
}

/// Non-corner border tiles whose single interior neighbour is a room tile.
inline std::vector<Coord> entrance_candidates(const FloorGrid& grid) {
    std::vector<Coord> out;
    grid.for_each([&](Coord c, const Tile& t) {
        if (!grid.on_border(c) || grid.is_corner(c) || t.kind != TileKind::ExteriorWall) return;
        Coord inward = c.x == 0                  ? Coord{1, 0}
                       : c.x == grid.width() - 1 ? Coord{-1, 0}
                       : c.z == 0                ? Coord{0, 1}
                                                 : Coord{0, -1};
        if (grid.at(c + inward).is_room()) out.push_back(c);
    });
    return out;
}

/// Knock the single entrance through a uniformly chosen border tile that
/// opens onto a room.
inline Coord place_exterior_door(FloorGrid& grid, RngStream& rng) {
    if (grid.count(TileKind::ExteriorDoor) != 0)
        throw GenerationError("entrance", "the plan already has an entrance");
    auto candidates = entrance_candidates(grid);
    if (candidates.empty())
        throw GenerationError("entrance", "no border tile opens onto a room");
    Coord c = rng.pick(std::span<const Coord>(candidates));
    grid.set(c, Tile::exterior_door());
    return c;
}

}  // namespace organic
