#include <gtest/gtest.h>

#include <organic/grid.hpp>
#include <organic/rng.hpp>

using namespace organic;

TEST(Grid, NewGridFiveByFive) {
    FloorGrid g = new_grid(5, 5);
    EXPECT_EQ(g.count(TileKind::ExteriorWall), 16u);
    EXPECT_EQ(g.count(TileKind::Empty), 9u);
    EXPECT_FALSE(find_invariant_violation(g));
}

TEST(Grid, NewGridSevenBySeven) {
    FloorGrid g = new_grid(7, 7);
    EXPECT_EQ(g.count(TileKind::ExteriorWall), 24u);
    EXPECT_EQ(g.count(TileKind::Empty), 25u);
}

TEST(Grid, DimensionTooSmallNamesAxis) {
    try {
        new_grid(4, 9);
        FAIL() << "expected DimensionError";
    } catch (const DimensionError& e) {
        EXPECT_EQ(e.axis(), "width");
    }
    try {
        new_grid(9, 3);
        FAIL() << "expected DimensionError";
    } catch (const DimensionError& e) {
        EXPECT_EQ(e.axis(), "depth");
    }
}

TEST(Grid, Neighbors4Counts) {
    FloorGrid g = new_grid(7, 7);
    EXPECT_EQ(neighbors4(g, {3, 3}).size(), 4u);
    EXPECT_EQ(neighbors4(g, {0, 0}).size(), 2u);
    EXPECT_EQ(neighbors4(g, {0, 3}).size(), 3u);
    EXPECT_THROW(neighbors4(g, {7, 0}), ValidationError);
    EXPECT_THROW(neighbors4(g, {-1, 2}), ValidationError);
}

TEST(Grid, Neighbors4NeverSelfOrDiagonal) {
    FloorGrid g = new_grid(6, 8);
    g.for_each([&](Coord c, const Tile&) {
        for (Coord n : neighbors4(g, c)) {
            int manhattan = std::abs(n.x - c.x) + std::abs(n.z - c.z);
            EXPECT_EQ(manhattan, 1);
        }
    });
}

TEST(Grid, InvariantViolationsDetected) {
    FloorGrid g = new_grid(6, 6);
    g.set({0, 2}, Tile::room_tile(0));
    EXPECT_TRUE(find_invariant_violation(g));

    g = new_grid(6, 6);
    g.set({2, 2}, Tile::exterior_wall());
    EXPECT_TRUE(find_invariant_violation(g));

    g = new_grid(6, 6);
    g.set({0, 2}, Tile::exterior_door());
    EXPECT_FALSE(find_invariant_violation(g));
    g.set({0, 3}, Tile::exterior_door());
    EXPECT_TRUE(find_invariant_violation(g));
}

TEST(Rng, SameSeedSameSequence) {
    RngStream a(123);
    RngStream b(123);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, DerivedStreamsAreIndependentOfEachOther) {
    EXPECT_NE(derive_seed(7, "place"), derive_seed(7, "grow"));
    EXPECT_NE(derive_seed(7, "building", 0), derive_seed(7, "building", 1));
    EXPECT_NE(derive_seed(7, "place"), derive_seed(8, "place"));
    EXPECT_EQ(derive_seed(7, "place", 3), derive_seed(7, "place", 3));
}
