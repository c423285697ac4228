#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grid.hpp"
#include "rng.hpp"

namespace organic {

struct Room {
    int id = 0;
    Coord anchor;          // min corner of the 2x2 seed
    std::set<Coord> tiles;

    int area() const { return static_cast<int>(tiles.size()); }
    friend bool operator==(const Room&, const Room&) = default;
};

/// Number of rooms to request: the cube-root rule, or a fixed count.
struct RoomCountPolicy {
    enum class Mode { Formula, Explicit };

    Mode mode = Mode::Formula;
    int count = 0;  // only meaningful for Explicit

    static RoomCountPolicy formula() { return {}; }
    static RoomCountPolicy explicit_count(int n) {
        if (n < 1) throw ValidationError("explicit room count must be >= 1");
        return {Mode::Explicit, n};
    }

    int resolve(int width, int depth) const;

    std::string to_string() const {
        return mode == Mode::Formula ? "formula" : "explicit:" + std::to_string(count);
    }

    // Accepts "formula" or "explicit:<n>".
    static RoomCountPolicy parse(std::string_view text) {
        if (text == "formula") return formula();
        constexpr std::string_view prefix = "explicit:";
        if (text.starts_with(prefix)) {
            auto digits = text.substr(prefix.size());
            int n = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
            if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty())
                return explicit_count(n);
        }
        throw ValidationError("room policy must be 'formula' or 'explicit:<n>', got '" +
                              std::string(text) + "'");
    }

    friend bool operator==(const RoomCountPolicy&, const RoomCountPolicy&) = default;
};

/// round(cbrt(width * depth)), halves rounded up, at least one.
inline int room_count(int width, int depth) {
    validate_dimensions(width, depth);
    const double root = std::cbrt(static_cast<double>(width) * static_cast<double>(depth));
    return std::max(1, static_cast<int>(std::floor(root + 0.5)));
}

inline int RoomCountPolicy::resolve(int width, int depth) const {
    return mode == Mode::Formula ? room_count(width, depth) : count;
}

namespace detail {

inline bool touches_other_room(const FloorGrid& grid, Coord c, int own_id) {
    for (Coord n : grid.neighbors(c)) {
        const Tile& t = grid.at(n);
        if (t.is_room() && t.room != own_id) return true;
    }
    return false;
}

inline void claim(FloorGrid& grid, Room& room, Coord c) {
    grid.set(c, Tile::room_tile(room.id));
    room.tiles.insert(c);
}

}  // namespace detail

inline constexpr int kDefaultPlacementAttempts = 100;

/// Drop `count` 2x2 seeds at uniformly random interior anchors. A seed may not
/// overlap or be 4-adjacent to an earlier one; after `max_attempts` rejected
/// draws a room is abandoned and its id is left unused.
inline std::vector<Room> place_rooms(FloorGrid& grid, int count, RngStream& rng,
                                     int max_attempts = kDefaultPlacementAttempts) {
    if (count < 1) throw ValidationError("room count must be >= 1");
    if (max_attempts < 1) throw ValidationError("max placement attempts must be >= 1");

    const int max_x = grid.width() - 3;
    const int max_z = grid.depth() - 3;
    std::vector<Room> rooms;
    for (int id = 0; id < count; ++id) {
        for (int attempt = 0; attempt < max_attempts; ++attempt) {
            Coord anchor{rng.uniform_int(1, max_x), rng.uniform_int(1, max_z)};
            std::array<Coord, 4> square = {
                anchor, anchor + Coord{1, 0}, anchor + Coord{0, 1}, anchor + Coord{1, 1}};
            bool ok = std::all_of(square.begin(), square.end(), [&](Coord c) {
                return grid.at(c).kind == TileKind::Empty && !detail::touches_other_room(grid, c, id);
            });
            if (!ok) continue;
            Room room{id, anchor, {}};
            for (Coord c : square) detail::claim(grid, room, c);
            rooms.push_back(std::move(room));
            break;
        }
    }
    if (rooms.empty()) throw GenerationError("placement", "no room could be placed");
    return rooms;
}

/// Empty tiles orthogonally next to `room` and not orthogonally next to any
/// other room. Sorted, no duplicates.
inline std::vector<Coord> growth_candidates(const FloorGrid& grid, const Room& room) {
    std::vector<Coord> out;
    for (Coord c : room.tiles) {
        for (Coord n : grid.neighbors(c)) {
            if (grid.at(n).kind == TileKind::Empty && !detail::touches_other_room(grid, n, room.id))
                out.push_back(n);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct GrowthStats {
    int passes = 0;          // including the final pass that claimed nothing
    int tiles_claimed = 0;
};

using GrowthObserver = std::function<void(const FloorGrid&, std::span<const Room>)>;

/// Rooms take turns claiming one candidate tile each, in an order reshuffled
/// every pass, until a full pass claims nothing. `on_pass` (optional) sees the
/// state after each pass.
inline GrowthStats grow_rooms(FloorGrid& grid, std::vector<Room>& rooms, RngStream& rng,
                              const GrowthObserver& on_pass = {}) {
    GrowthStats stats;
    std::vector<std::size_t> order(rooms.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (;;) {
        ++stats.passes;
        rng.shuffle(std::span<std::size_t>(order));
        int claimed = 0;
        for (std::size_t i : order) {
            Room& room = rooms[i];
            auto candidates = growth_candidates(grid, room);
            if (candidates.empty()) continue;
            detail::claim(grid, room, rng.pick(std::span<const Coord>(candidates)));
            ++claimed;
        }
        stats.tiles_claimed += claimed;
        if (on_pass) on_pass(grid, rooms);
        if (claimed == 0) break;
    }
    return stats;
}

}  // namespace organic
