#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "facade.hpp"
#include "grid.hpp"

namespace organic {

enum class VoxelBlock : std::uint8_t { Air, SolidWall, Glass, FloorSlab, RoofSlab, DoorOpening };

inline constexpr std::array<std::string_view, 6> kVoxelNames = {
    "air", "solid_wall", "glass", "floor_slab", "roof_slab", "door_opening"};

inline constexpr std::string_view voxel_name(VoxelBlock b) {
    return kVoxelNames[static_cast<std::size_t>(b)];
}

inline std::optional<VoxelBlock> voxel_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kVoxelNames.size(); ++i)
        if (kVoxelNames[i] == name) return static_cast<VoxelBlock>(i);
    return std::nullopt;
}

/// Dense width x layers x depth block array. Storage order is x-major, then
/// z, then y, which is also the export order.
class VoxelVolume {
public:
    VoxelVolume() = default;
    VoxelVolume(int width, int layers, int depth, VoxelBlock fill = VoxelBlock::Air)
        : width_(width), layers_(layers), depth_(depth),
          blocks_(static_cast<std::size_t>(width) * static_cast<std::size_t>(layers) *
                      static_cast<std::size_t>(depth),
                  fill) {}

    int width() const noexcept { return width_; }
    int layers() const noexcept { return layers_; }
    int depth() const noexcept { return depth_; }
    std::size_t size() const noexcept { return blocks_.size(); }

    bool in_bounds(int x, int y, int z) const noexcept {
        return x >= 0 && y >= 0 && z >= 0 && x < width_ && y < layers_ && z < depth_;
    }

    VoxelBlock at(int x, int y, int z) const { return blocks_[offset(x, y, z)]; }
    void set(int x, int y, int z, VoxelBlock b) { blocks_[offset(x, y, z)] = b; }

    std::span<const VoxelBlock> blocks() const noexcept { return blocks_; }
    std::span<VoxelBlock> blocks() noexcept { return blocks_; }

    std::size_t count(VoxelBlock b) const {
        std::size_t n = 0;
        for (VoxelBlock v : blocks_) n += (v == b);
        return n;
    }

    friend bool operator==(const VoxelVolume&, const VoxelVolume&) = default;

private:
    std::size_t offset(int x, int y, int z) const {
        return (static_cast<std::size_t>(x) * static_cast<std::size_t>(depth_) +
                static_cast<std::size_t>(z)) *
                   static_cast<std::size_t>(layers_) +
               static_cast<std::size_t>(y);
    }

    int width_ = 0;
    int layers_ = 0;
    int depth_ = 0;
    std::vector<VoxelBlock> blocks_;
};

struct BuildingModel {
    FloorGrid plan;
    int height = 0;  // wall courses between floor (y = 0) and roof (y = height + 1)
    std::array<WallMatrix, 4> facades;  // indexed by Side
    VoxelVolume voxels;
    Coord entrance;

    friend bool operator==(const BuildingModel&, const BuildingModel&) = default;
};

inline constexpr int kDoorHeight = 2;

/// The facade cell that supplies the block at border column `c`, if any.
/// North and south walls own the four corner columns.
struct FacadeCell {
    Side side;
    int column;
};

inline std::optional<FacadeCell> facade_cell_for(const FloorGrid& plan, Coord c) {
    if (c.z == 0) return FacadeCell{Side::North, c.x};
    if (c.z == plan.depth() - 1) return FacadeCell{Side::South, c.x};
    if (c.x == plan.width() - 1) return FacadeCell{Side::East, c.z};
    if (c.x == 0) return FacadeCell{Side::West, c.z};
    return std::nullopt;
}

/// Extrude the plan to `height` wall courses, wrap it in the four facades and
/// cap it with floor and roof slabs.
inline BuildingModel assemble(const FloorGrid& plan, const std::array<WallMatrix, 4>& facades,
                              int height) {
    if (height < kMinHeight) throw DimensionError("height", height, kMinHeight);
    for (Side s : kSides) {
        const WallMatrix& m = facades[static_cast<std::size_t>(s)];
        if (m.height() != height || m.length() != side_length(s, plan.width(), plan.depth()))
            throw ValidationError("facade '" + std::string(side_name(s)) +
                                  "' does not match the building's dimensions");
    }

    BuildingModel model;
    model.plan = plan;
    model.height = height;
    model.facades = facades;
    model.voxels = VoxelVolume(plan.width(), height + 2, plan.depth());

    int entrances = 0;
    plan.for_each([&](Coord c, const Tile& t) {
        auto& v = model.voxels;
        v.set(c.x, 0, c.z, VoxelBlock::FloorSlab);
        v.set(c.x, height + 1, c.z, VoxelBlock::RoofSlab);
        for (int y = 1; y <= height; ++y) {
            VoxelBlock b = VoxelBlock::SolidWall;
            if (auto cell = facade_cell_for(plan, c)) {
                const WallMatrix& m = facades[static_cast<std::size_t>(cell->side)];
                b = m.at(y - 1, cell->column) == WallCell::Glass ? VoxelBlock::Glass
                                                                 : VoxelBlock::SolidWall;
            }
            switch (t.kind) {
                case TileKind::Room:
                case TileKind::Empty:
                    b = VoxelBlock::Air;
                    break;
                case TileKind::Door:
                case TileKind::ExteriorDoor:
                    if (y <= kDoorHeight) b = VoxelBlock::DoorOpening;
                    break;
                case TileKind::InteriorWall:
                case TileKind::ExteriorWall:
                    break;
            }
            v.set(c.x, y, c.z, b);
        }
        if (t.kind == TileKind::ExteriorDoor) {
            model.entrance = c;
            ++entrances;
        }
    });
    if (entrances != 1)
        throw ValidationError("plan must have exactly one entrance before assembly");
    return model;
}

// ---------------------------------------------------------------------------
// ASCII layout

struct AsciiLayout {
    std::vector<std::string> rows;  // one per z line, one char per x

    std::string to_string() const {
        std::string out;
        for (const auto& r : rows) {
            out += r;
            out += '\n';
        }
        return out;
    }

    static constexpr std::string_view legend =
        "# exterior wall, * interior wall, D door, E entrance, . empty, "
        "0-9 a-z room id";

    friend bool operator==(const AsciiLayout&, const AsciiLayout&) = default;
};

inline constexpr int kMaxAsciiRooms = 36;

inline char room_symbol(int id) {
    if (id < 0 || id >= kMaxAsciiRooms)
        throw ValidationError("room id " + std::to_string(id) +
                              " has no ASCII symbol (at most 36 rooms can be rendered)");
    return id < 10 ? static_cast<char>('0' + id) : static_cast<char>('a' + (id - 10));
}

inline AsciiLayout render_ascii(const FloorGrid& plan) {
    AsciiLayout out;
    for (int z = 0; z < plan.depth(); ++z) {
        std::string line;
        line.reserve(static_cast<std::size_t>(plan.width()));
        for (int x = 0; x < plan.width(); ++x) {
            const Tile& t = plan.at({x, z});
            switch (t.kind) {
                case TileKind::Empty: line += '.'; break;
                case TileKind::ExteriorWall: line += '#'; break;
                case TileKind::InteriorWall: line += '*'; break;
                case TileKind::Door: line += 'D'; break;
                case TileKind::ExteriorDoor: line += 'E'; break;
                case TileKind::Room: line += room_symbol(t.room); break;
            }
        }
        out.rows.push_back(std::move(line));
    }
    return out;
}

/// Inverse of render_ascii. Accepts LF or CRLF line ends and an optional
/// trailing newline; the result must satisfy the FloorGrid invariants.
inline FloorGrid parse_ascii(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    if (lines.empty()) throw ParseError("empty layout");

    const auto width = lines.front().size();
    for (std::size_t r = 0; r < lines.size(); ++r)
        if (lines[r].size() != width)
            throw ParseError("ragged layout: row length " + std::to_string(lines[r].size()) +
                                 " differs from " + std::to_string(width),
                             static_cast<int>(r));
    if (width < static_cast<std::size_t>(kMinDimension) ||
        lines.size() < static_cast<std::size_t>(kMinDimension))
        throw ParseError("layout must be at least 5x5");

    FloorGrid g = FloorGrid::filled(static_cast<int>(width), static_cast<int>(lines.size()),
                                    Tile::empty());
    for (std::size_t z = 0; z < lines.size(); ++z) {
        for (std::size_t x = 0; x < width; ++x) {
            char ch = lines[z][x];
            Tile t;
            if (ch == '.') t = Tile::empty();
            else if (ch == '#') t = Tile::exterior_wall();
            else if (ch == '*') t = Tile::interior_wall();
            else if (ch == 'D') t = Tile::door();
            else if (ch == 'E') t = Tile::exterior_door();
            else if (ch >= '0' && ch <= '9') t = Tile::room_tile(ch - '0');
            else if (ch >= 'a' && ch <= 'z') t = Tile::room_tile(10 + (ch - 'a'));
            else
                throw ParseError(std::string("unknown layout character '") + ch + "'",
                                 static_cast<int>(z), static_cast<int>(x));
            g.set({static_cast<int>(x), static_cast<int>(z)}, t);
        }
    }
    if (auto problem = find_invariant_violation(g)) throw ParseError("invalid layout: " + *problem);
    return g;
}

// ---------------------------------------------------------------------------
// JSON document

inline constexpr int kSchemaVersion = 1;

/// Optional provenance written alongside the model.
struct ExportContext {
    std::optional<GenerationConfig> config;
    std::optional<std::uint64_t> seed;
    nlohmann::json metrics;  // null when absent
};

inline nlohmann::json export_json(const BuildingModel& model, const ExportContext& ctx = {}) {
    using nlohmann::json;
    json doc;
    doc["schema_version"] = kSchemaVersion;
    json config = ctx.config ? config_to_json(*ctx.config) : json::object();
    config["width"] = model.plan.width();
    config["depth"] = model.plan.depth();
    config["height"] = model.height;
    if (ctx.seed) config["seed"] = *ctx.seed;
    doc["config"] = std::move(config);
    doc["plan"] = render_ascii(model.plan).rows;
    doc["entrance"] = {model.entrance.x, model.entrance.z};

    json facades = json::object();
    for (Side s : kSides)
        facades[std::string(side_name(s))] = model.facades[static_cast<std::size_t>(s)].rows();
    doc["facades"] = std::move(facades);

    std::array<int, kVoxelNames.size()> palette_index;
    palette_index.fill(-1);
    json palette = json::array();
    for (std::size_t k = 0; k < kVoxelNames.size(); ++k) {
        if (model.voxels.count(static_cast<VoxelBlock>(k)) == 0) continue;
        palette_index[k] = static_cast<int>(palette.size());
        palette.push_back(kVoxelNames[k]);
    }
    std::vector<int> indices;
    indices.reserve(model.voxels.size());
    for (VoxelBlock b : model.voxels.blocks())
        indices.push_back(palette_index[static_cast<std::size_t>(b)]);
    doc["voxels"] = {
        {"size", {model.voxels.width(), model.voxels.layers(), model.voxels.depth()}},
        {"order", "x,z,y"},
        {"palette", std::move(palette)},
        {"indices", std::move(indices)},
    };
    doc["metrics"] = ctx.metrics.is_null() ? json::object() : ctx.metrics;
    return doc;
}

struct ImportedBuilding {
    BuildingModel model;
    std::optional<GenerationConfig> config;
    std::optional<std::uint64_t> seed;
    nlohmann::json metrics;
};

inline ImportedBuilding import_json(const nlohmann::json& doc) {
    using nlohmann::json;
    ImportedBuilding out;
    try {
        if (doc.value("schema_version", 0) != kSchemaVersion)
            throw ParseError("unsupported schema_version");
        std::string plan_text;
        for (const auto& row : doc.at("plan")) plan_text += row.get<std::string>() + "\n";
        BuildingModel& m = out.model;
        m.plan = parse_ascii(plan_text);
        const json& config = doc.at("config");
        m.height = config.at("height").get<int>();
        m.entrance = {doc.at("entrance").at(0).get<int>(), doc.at("entrance").at(1).get<int>()};
        for (Side s : kSides)
            m.facades[static_cast<std::size_t>(s)] = WallMatrix::from_rows(
                doc.at("facades").at(std::string(side_name(s))).get<std::vector<std::string>>());

        const json& vox = doc.at("voxels");
        const auto size = vox.at("size").get<std::array<int, 3>>();
        if (size[0] != m.plan.width() || size[2] != m.plan.depth() || size[1] != m.height + 2)
            throw ParseError("voxel size does not match plan and height");
        std::vector<VoxelBlock> palette;
        for (const auto& name : vox.at("palette")) {
            auto b = voxel_from_name(name.get<std::string>());
            if (!b) throw ParseError("unknown voxel kind '" + name.get<std::string>() + "'");
            palette.push_back(*b);
        }
        m.voxels = VoxelVolume(size[0], size[1], size[2]);
        const json& indices = vox.at("indices");
        if (indices.size() != m.voxels.size()) throw ParseError("voxel index array has wrong length");
        auto blocks = m.voxels.blocks();
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            auto k = indices[i].get<std::size_t>();
            if (k >= palette.size()) throw ParseError("voxel index outside palette");
            blocks[i] = palette[k];
        }

        GenerationConfig base;
        json echo = config;
        if (echo.contains("seed")) {
            out.seed = echo.at("seed").get<std::uint64_t>();
            echo.erase("seed");
        }
        if (echo.contains("rooms")) out.config = config_from_json(echo, base);
        out.metrics = doc.value("metrics", json::object());
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed building document: ") + e.what());
    }
    return out;
}

}  // namespace organic
