#pragma once

#include <json.hpp>

#include "doors.hpp"
#include "facade.hpp"
#include "rooms.hpp"

namespace organic {

inline constexpr int kDefaultHeight = 4;
inline constexpr int kMinHeight = 3;

/// Everything that shapes one building apart from its seed.
struct GenerationConfig {
    int width = 9;
    int depth = 9;
    int height = kDefaultHeight;
    RoomCountPolicy rooms = RoomCountPolicy::formula();
    int max_attempts = kDefaultPlacementAttempts;
    CaParams ca;
    DoorRules doors;
    bool repair = true;

    void validate() const {
        validate_dimensions(width, depth);
        if (height < kMinHeight)
            throw DimensionError("height", height, kMinHeight);
        if (rooms.mode == RoomCountPolicy::Mode::Explicit && rooms.count < 1)
            throw ValidationError("explicit room count must be >= 1");
        if (max_attempts < 1) throw ValidationError("max placement attempts must be >= 1");
        ca.validate();
    }

    friend bool operator==(const GenerationConfig&, const GenerationConfig&) = default;
};

inline nlohmann::json config_to_json(const GenerationConfig& c) {
    return {
        {"width", c.width},
        {"depth", c.depth},
        {"height", c.height},
        {"rooms", c.rooms.to_string()},
        {"max_attempts", c.max_attempts},
        {"ca_glass_prob", c.ca.init_glass_probability},
        {"ca_generations", c.ca.generations},
        {"ca_glass_sums", c.ca.sums_to_string()},
        {"door_exterior_walls_count", c.doors.exterior_walls_count},
        {"door_pass", std::string(door_pass_name(c.doors.pass))},
        {"repair", c.repair},
    };
}

/// Overlay keys present in `j` onto `base`. Unknown keys are rejected so a
/// typo in a config file does not silently fall back to a default.
inline GenerationConfig config_from_json(const nlohmann::json& j, GenerationConfig base = {}) {
    if (!j.is_object()) throw ParseError("config document must be a JSON object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "width") base.width = value.get<int>();
            else if (key == "depth") base.depth = value.get<int>();
            else if (key == "height") base.height = value.get<int>();
            else if (key == "rooms") base.rooms = RoomCountPolicy::parse(value.get<std::string>());
            else if (key == "max_attempts") base.max_attempts = value.get<int>();
            else if (key == "ca_glass_prob") base.ca.init_glass_probability = value.get<double>();
            else if (key == "ca_generations") base.ca.generations = value.get<int>();
            else if (key == "ca_glass_sums")
                base.ca.glass_sums = CaParams::parse_sums(value.get<std::string>());
            else if (key == "door_exterior_walls_count")
                base.doors.exterior_walls_count = value.get<bool>();
            else if (key == "door_pass")
                base.doors.pass = parse_door_pass(value.get<std::string>());
            else if (key == "repair") base.repair = value.get<bool>();
            else throw ParseError("unknown config key '" + key + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad config value: ") + e.what());
    }
    return base;
}

}  // namespace organic
