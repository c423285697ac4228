#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace organic {

// Coordinates are (x, z): x in [0, width), z in [0, depth). (0, 0) is the
// north-west corner; z grows southward, x grows eastward.
struct Coord {
    int x = 0;
    int z = 0;

    friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
    constexpr Coord operator+(Coord o) const { return {x + o.x, z + o.z}; }
    constexpr Coord operator-(Coord o) const { return {x - o.x, z - o.z}; }
};

inline constexpr std::array<Coord, 4> kSteps4 = {{{0, -1}, {1, 0}, {0, 1}, {-1, 0}}};

enum class TileKind : std::uint8_t {
    Empty,         // unassigned interior
    ExteriorWall,
    InteriorWall,
    Room,
    Door,
    ExteriorDoor,
};

struct Tile {
    TileKind kind = TileKind::Empty;
    int room = -1;  // valid only when kind == Room

    static constexpr Tile empty() { return {TileKind::Empty, -1}; }
    static constexpr Tile exterior_wall() { return {TileKind::ExteriorWall, -1}; }
    static constexpr Tile interior_wall() { return {TileKind::InteriorWall, -1}; }
    static constexpr Tile door() { return {TileKind::Door, -1}; }
    static constexpr Tile exterior_door() { return {TileKind::ExteriorDoor, -1}; }
    static constexpr Tile room_tile(int id) { return {TileKind::Room, id}; }

    constexpr bool is_room() const { return kind == TileKind::Room; }
    constexpr bool is_room(int id) const { return kind == TileKind::Room && room == id; }
    constexpr bool is_wall() const {
        return kind == TileKind::InteriorWall || kind == TileKind::ExteriorWall;
    }
    constexpr bool is_passable() const {
        return kind == TileKind::Room || kind == TileKind::Door || kind == TileKind::ExteriorDoor;
    }

    friend constexpr bool operator==(const Tile&, const Tile&) = default;
};

// In-bounds orthogonal neighbours of a tile; never more than four.
class Neighbors {
public:
    void push(Coord c) { items_[count_++] = c; }
    const Coord* begin() const { return items_.data(); }
    const Coord* end() const { return items_.data() + count_; }
    std::size_t size() const { return count_; }
    Coord operator[](std::size_t i) const { return items_[i]; }

private:
    std::array<Coord, 4> items_{};
    std::size_t count_ = 0;
};

inline constexpr int kMinDimension = 5;

/// One storey of tiles. Values are plain data: copyable, comparable, and safe
/// to hand to another thread once a stage is done with them.
class FloorGrid {
public:
    FloorGrid() = default;

    int width() const noexcept { return width_; }
    int depth() const noexcept { return depth_; }
    int area() const noexcept { return width_ * depth_; }
    int interior_area() const noexcept { return (width_ - 2) * (depth_ - 2); }

    bool in_bounds(Coord c) const noexcept {
        return c.x >= 0 && c.z >= 0 && c.x < width_ && c.z < depth_;
    }
    bool on_border(Coord c) const noexcept {
        return c.x == 0 || c.z == 0 || c.x == width_ - 1 || c.z == depth_ - 1;
    }
    bool is_corner(Coord c) const noexcept {
        return (c.x == 0 || c.x == width_ - 1) && (c.z == 0 || c.z == depth_ - 1);
    }

    const Tile& at(Coord c) const { return tiles_[offset(c)]; }
    Tile& at(Coord c) { return tiles_[offset(c)]; }
    void set(Coord c, Tile t) { tiles_[offset(c)] = t; }

    // Row-major (z outer, x inner).
    std::span<const Tile> tiles() const noexcept { return tiles_; }

    Neighbors neighbors(Coord c) const {
        Neighbors out;
        for (Coord s : kSteps4) {
            Coord n = c + s;
            if (in_bounds(n)) out.push(n);
        }
        return out;
    }

    std::size_t count(TileKind kind) const {
        std::size_t n = 0;
        for (const Tile& t : tiles_) n += (t.kind == kind);
        return n;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int z = 0; z < depth_; ++z)
            for (int x = 0; x < width_; ++x) fn(Coord{x, z}, tiles_[offset({x, z})]);
    }

    friend bool operator==(const FloorGrid&, const FloorGrid&) = default;

    // Builds a grid of the given size filled with `fill`; callers are expected
    // to establish the border themselves. Prefer new_grid().
    static FloorGrid filled(int width, int depth, Tile fill) {
        FloorGrid g;
        g.width_ = width;
        g.depth_ = depth;
        g.tiles_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(depth), fill);
        return g;
    }

private:
    std::size_t offset(Coord c) const {
        return static_cast<std::size_t>(c.z) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(c.x);
    }

    int width_ = 0;
    int depth_ = 0;
    std::vector<Tile> tiles_;
};

inline void validate_dimensions(int width, int depth) {
    if (width < kMinDimension) throw DimensionError("width", width, kMinDimension);
    if (depth < kMinDimension) throw DimensionError("depth", depth, kMinDimension);
}

/// Fresh plan: border is exterior wall, everything inside is Empty.
inline FloorGrid new_grid(int width, int depth) {
    validate_dimensions(width, depth);
    FloorGrid g = FloorGrid::filled(width, depth, Tile::empty());
    for (int x = 0; x < width; ++x) {
        g.set({x, 0}, Tile::exterior_wall());
        g.set({x, depth - 1}, Tile::exterior_wall());
    }
    for (int z = 0; z < depth; ++z) {
        g.set({0, z}, Tile::exterior_wall());
        g.set({width - 1, z}, Tile::exterior_wall());
    }
    return g;
}

inline Neighbors neighbors4(const FloorGrid& grid, Coord pos) {
    if (!grid.in_bounds(pos))
        throw ValidationError("position (" + std::to_string(pos.x) + ", " +
                              std::to_string(pos.z) + ") is outside the grid");
    return grid.neighbors(pos);
}

/// Returns a description of the first border/interior partition violation,
/// or nullopt when the grid is well formed.
inline std::optional<std::string> find_invariant_violation(const FloorGrid& grid) {
    if (grid.width() < kMinDimension || grid.depth() < kMinDimension)
        return "grid smaller than " + std::to_string(kMinDimension) + "x" +
               std::to_string(kMinDimension);
    int exterior_doors = 0;
    std::optional<std::string> problem;
    grid.for_each([&](Coord c, const Tile& t) {
        if (problem) return;
        auto where = " at (" + std::to_string(c.x) + ", " + std::to_string(c.z) + ")";
        if (grid.on_border(c)) {
            if (t.kind == TileKind::ExteriorDoor) {
                ++exterior_doors;
            } else if (t.kind != TileKind::ExteriorWall) {
                problem = "border tile is not an exterior wall or entrance" + where;
            }
        } else if (t.kind == TileKind::ExteriorWall || t.kind == TileKind::ExteriorDoor) {
            problem = "exterior material inside the building" + where;
        } else if (t.kind == TileKind::Room && t.room < 0) {
            problem = "room tile without a room id" + where;
        }
    });
    if (problem) return problem;
    if (exterior_doors > 1) return "more than one entrance";
    return std::nullopt;
}

inline void check_invariants(const FloorGrid& grid, const std::string& stage) {
    if (auto problem = find_invariant_violation(grid)) throw GenerationError(stage, *problem);
}

}  // namespace organic
