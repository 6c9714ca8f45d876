#include "approx.hpp"

#include <algorithm>
#include <map>
#include <numbers>

#include "cabletract/io.hpp"
#include "cabletract/planner.hpp"

using namespace cabletract;

namespace {
FieldPolygon rect(double w, double h) { return {"r", FieldClass::Rectangle, {{0, 0}, {w, 0}, {w, h}, {0, h}}, {}}; }
}  // namespace

TEST_CASE("square decomposes into two full strips") {
    const StripPlan p = decompose(rect(100, 100), 50, 1.5, 0);
    CHECK(p.strips.size() == 2);
    CHECK(p.anchor_placements == 2);
    CHECK(p.eta == approx(1.0));
}

TEST_CASE("strip count is the ceiling of height over span") {
    CHECK(decompose(rect(80, 120), 50, 1.5, 0).strips.size() == 3);
    CHECK(decompose(rect(80, 150), 50, 1.5, 0).strips.size() == 3);
}

TEST_CASE("strip through a U gap needs two placements") {
    const FieldPolygon u{"u", FieldClass::IrregularConcave,
                         {{0, 0}, {100, 0}, {100, 50}, {70, 50}, {70, 20}, {30, 20}, {30, 50}, {0, 50}}, {}};
    const StripPlan p = decompose(u, 25, 1.5, 0);
    REQUIRE(p.strips.size() == 2);
    CHECK(p.strips[0].pieces.size() == 1);
    CHECK(p.strips[1].pieces.size() == 2);
    CHECK(p.anchor_placements == 3);
}

TEST_CASE("plan invariants over the corpus") {
    for (const auto& f : generate_corpus(kDefaultSeed)) {
        const StripPlan p = best_orientation(f, 50, 1.5);
        CAPTURE(f.id);
        CHECK(p.eta <= 1.0 + 1e-12);
        CHECK(p.swept_area_m2 >= p.field_area_m2 * (1 - 1e-12));
        CHECK(p.anchor_placements >= static_cast<int>(p.strips.size()));
        const StripPlan moved = best_orientation(translate(f, {1234.5, -987.25}), 50, 1.5);
        CHECK(moved.eta == approx(p.eta).epsilon(1e-9));
        FieldPolygon shifted = f;
        std::rotate(shifted.outer.begin(), shifted.outer.begin() + 1, shifted.outer.end());
        CHECK(best_orientation(shifted, 50, 1.5).eta == approx(p.eta).epsilon(1e-9));
    }
}

TEST_CASE("rotated rectangle is realigned by the sweep") {
    const FieldPolygon r = rect(150, 100);
    CHECK(best_orientation(rotate(r, 45.0 * std::numbers::pi / 180.0), 50, 1.5).eta >= 0.98);
    CHECK(best_orientation(rotate(r, 40.0 * std::numbers::pi / 180.0), 50, 1.5).eta >= 0.98);
}

TEST_CASE("class medians and corpus median") {
    std::map<FieldClass, std::vector<double>> by;
    std::vector<double> all;
    for (const auto& f : generate_corpus(kDefaultSeed)) {
        const double e = best_orientation(f, 50, 1.5).eta;
        by[f.cls].push_back(e);
        all.push_back(e);
    }
    CHECK(median(all) == approx(0.77).epsilon(0.03 / 0.77));
    CHECK(median(by[FieldClass::Rectangle]) == approx(1.0).epsilon(1e-9));
    CHECK(median(by[FieldClass::LShape]) == approx(0.905).epsilon(0.04 / 0.905));
    CHECK(median(by[FieldClass::RealShape]) == approx(0.800).epsilon(0.05 / 0.800));
    CHECK(median(by[FieldClass::IrregularConvex]) == approx(0.702).epsilon(0.05 / 0.702));
    CHECK(median(by[FieldClass::IrregularConcave]) == approx(0.684).epsilon(0.05 / 0.684));
}

TEST_CASE("empty farm costs no time") {
    const TimeBudget t = farm_time_budget({}, ScenarioParams{});
    CHECK(t.operating_h == 0.0);
    CHECK(t.setup_h == 0.0);
    CHECK(t.travel_h == 0.0);
}

TEST_CASE("bundled farm") {
    const auto farm = load_farm(generate_corpus(kDefaultSeed));
    REQUIRE(farm.size() == 5);
    double area = 0;
    for (const auto& f : farm) area += polygon_area(f.field);
    CHECK(area / 1e4 == approx(21.0).epsilon(0.05));
}

TEST_CASE("bundled farm time budget") {
    const auto farm = load_farm(generate_corpus(kDefaultSeed));
    const TimeBudget t = farm_time_budget(farm, ScenarioParams{});
    CHECK(t.operating_h == approx(37.6).epsilon(0.15));
    CHECK(t.setup_h == approx(3.85).epsilon(0.15));
    CHECK(t.travel_h == approx(0.22).epsilon(0.5));
    CHECK(t.setup_h / (t.operating_h + t.setup_h + t.travel_h) == approx(0.09).epsilon(0.2));
}
