#include <gtest/gtest.h>

#include <cmath>

#include <organic/organic.hpp>

#include "oracles.hpp"

using namespace organic;

TEST(ConfidenceInterval, ZeroVariance) {
    std::vector<double> s = {5, 5, 5, 5};
    auto e = confidence_interval(s);
    EXPECT_DOUBLE_EQ(e.mean, 5.0);
    EXPECT_DOUBLE_EQ(e.half_width, 0.0);
}

TEST(ConfidenceInterval, TwoSamples) {
    // s = sqrt(((0-1)^2 + (2-1)^2) / 1) = sqrt(2); 1.96 * sqrt(2) / sqrt(2) = 1.96.
    std::vector<double> s = {0, 2};
    auto e = confidence_interval(s);
    EXPECT_DOUBLE_EQ(e.mean, 1.0);
    EXPECT_NEAR(e.half_width, 1.96, 1e-12);
}

TEST(ConfidenceInterval, SingleAndEmpty) {
    std::vector<double> one = {3.5};
    EXPECT_DOUBLE_EQ(confidence_interval(one).half_width, 0.0);
    EXPECT_THROW(confidence_interval(std::vector<double>{}), std::invalid_argument);
}

TEST(MeasureBuilding, SingleRoomNoDoors) {
    FloorGrid g = new_grid(7, 7);
    RngStream p(1), gr(2);
    auto rooms = place_rooms(g, 1, p);
    grow_rooms(g, rooms, gr);
    auto m = measure_building(g, rooms, connected_components(g), 0.0);
    EXPECT_EQ(m.room_areas, std::vector<int>{25});
    EXPECT_EQ(m.interior_door_count, 0);
    EXPECT_TRUE(m.connected_before_repair);
}

TEST(MeasureBuilding, TileConservationTwoRooms) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        GenerationConfig c;
        c.width = 9;
        c.depth = 7;
        c.rooms = RoomCountPolicy::explicit_count(2);
        PlanResult plan = generate_plan(c, seed);
        auto m = measure_building(plan.grid, plan.rooms, plan.connectivity, 0.0);
        int rooms = std::accumulate(m.room_areas.begin(), m.room_areas.end(), 0);
        int walls = static_cast<int>(plan.grid.count(TileKind::InteriorWall));
        EXPECT_EQ(rooms + walls + m.interior_door_count, plan.grid.interior_area());
        double mean = static_cast<double>(rooms) / static_cast<double>(m.room_areas.size());
        EXPECT_NEAR(m.avg_room_area, mean, 1e-12);
    }
}

TEST(MeasureBuilding, RepairMarksNotBornConnected) {
    ConnectivityReport r;
    r.component_count = 1;
    r.repairs_applied = 2;
    auto m = measure_building(new_grid(5, 5), {}, r, 0.0);
    EXPECT_FALSE(m.connected_before_repair);
    EXPECT_EQ(m.repairs_applied, 2);
}

TEST(RunBatch, SingleBuildingHasZeroHalfWidths) {
    GenerationConfig c;
    auto r = run_batch(c, 1, 9);
    EXPECT_EQ(r.summary.n, 1);
    EXPECT_DOUBLE_EQ(r.summary.avg_room_area.half_width, 0.0);
    EXPECT_DOUBLE_EQ(r.summary.door_count.half_width, 0.0);
}

TEST(RunBatch, DeterministicAcrossWorkerCounts) {
    GenerationConfig c;
    c.width = 10;
    c.depth = 8;
    auto a = run_batch(c, 60, 1234, 1);
    auto b = run_batch(c, 60, 1234, 1);
    auto p = run_batch(c, 60, 1234, 4);
    EXPECT_EQ(a.buildings, b.buildings);
    EXPECT_EQ(a.buildings, p.buildings);
    EXPECT_EQ(a.summary.avg_room_area.mean, p.summary.avg_room_area.mean);
    EXPECT_EQ(a.summary.door_count.half_width, p.summary.door_count.half_width);

    auto strip_timing = [](std::string t) { return t.substr(0, t.find("total time")); };
    EXPECT_EQ(strip_timing(format_summary_table(a.summary)),
              strip_timing(format_summary_table(p.summary)));
}

TEST(RunBatch, RatesWithinUnitInterval) {
    GenerationConfig c;
    c.width = 15;
    c.depth = 15;
    c.rooms = RoomCountPolicy::explicit_count(5);
    auto r = run_batch(c, 100, 3);
    EXPECT_GE(r.summary.pre_repair_connectivity_rate, 0.0);
    EXPECT_LE(r.summary.pre_repair_connectivity_rate, 1.0);
    EXPECT_DOUBLE_EQ(r.summary.post_repair_connectivity_rate, 1.0);
    int born = 0;
    for (const auto& m : r.buildings) born += m.connected_before_repair;
    EXPECT_DOUBLE_EQ(r.summary.pre_repair_connectivity_rate, born / 100.0);
}

TEST(RunBatch, RejectsBadInput) {
    GenerationConfig c;
    EXPECT_THROW(run_batch(c, 0, 1), ValidationError);
    c.width = 3;
    EXPECT_THROW(run_batch(c, 5, 1), ValidationError);
}

TEST(RunBatch, FailingBuildingReportsIndexAndSeed) {
    GenerationConfig c;
    const auto bad_seed = building_seed(1, 7);
    auto build = [&](const GenerationConfig& cfg, std::uint64_t seed) {
        if (seed == bad_seed || seed == building_seed(1, 12))
            throw GenerationError("repair", "injected");
        return generate_building(cfg, seed);
    };
    for (unsigned workers : {1u, 3u}) {
        try {
            run_batch_with(c, 20, 1, workers, build);
            FAIL() << "expected BatchError";
        } catch (const BatchError& e) {
            EXPECT_EQ(e.index(), 7);
            EXPECT_EQ(e.seed(), bad_seed);
            EXPECT_NE(std::string(e.what()).find("injected"), std::string::npos);
        }
    }
}

TEST(SummaryJson, Fields) {
    auto r = run_batch(GenerationConfig{}, 4, 8);
    auto j = summary_to_json(r.summary);
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["config"]["seed"], 8u);
    EXPECT_TRUE(j["avg_room_area"].contains("ci95"));
    EXPECT_TRUE(j.contains("pre_repair_connectivity_rate"));
}
