// Walk through the stages for one building and print each intermediate plan,
// then the four facades (top wall course first, as seen from outside).

#include <cstdint>
#include <cstdlib>
#include <iostream>

#include <organic/organic.hpp>

using namespace organic;

namespace {

void show(const char* title, const FloorGrid& g) {
    std::cout << "== " << title << "\n" << render_ascii(g).to_string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
    GenerationConfig config;
    config.width = 12;
    config.depth = 10;

    FloorGrid g = new_grid(config.width, config.depth);
    auto place = RngStream::derive(seed, "place");
    auto rooms = place_rooms(g, config.rooms.resolve(g.width(), g.depth()), place);
    show("seeds", g);

    auto grow = RngStream::derive(seed, "grow");
    grow_rooms(g, rooms, grow);
    show("grown", g);

    wallify_leftovers(g);
    auto doors = RngStream::derive(seed, "doors");
    place_doors(g, rooms, doors);
    show("doors", g);

    // The library pipeline reproduces the same plan from the same seed.
    GeneratedBuilding b = generate_building(config, seed);
    show("final", b.model.plan);

    for (Side s : kSides) {
        const WallMatrix& m = b.model.facades[static_cast<std::size_t>(s)];
        std::cout << "== facade " << side_name(s) << "\n";
        auto rows = m.rows();
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
            for (char c : *it) std::cout << (c == '1' ? 'o' : '#');
            std::cout << "\n";
        }
    }
    std::cout << "rooms " << b.metrics.room_count << ", avg area " << b.metrics.avg_room_area
              << ", interior doors " << b.metrics.interior_door_count << "\n";
}
