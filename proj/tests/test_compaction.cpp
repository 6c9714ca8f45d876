#include "approx.hpp"

#include "cabletract/compaction.hpp"
#include "cabletract/io.hpp"

using namespace cabletract;

namespace {
const std::vector<VehicleFootprint>& vehicles() {
    static const auto v = load_footprints();
    return v;
}
const VehicleFootprint& tractor() { return find_vehicle(vehicles(), "tractor"); }
const VehicleFootprint& carriage() { return find_vehicle(vehicles(), "carriage"); }
}  // namespace

TEST_CASE("contact pressures from the bundled footprints") {
    CHECK(tractor().mean_pressure_kPa() == approx(143.0).epsilon(1e-3));
    CHECK(tractor().max_pressure_kPa() == approx(150.0).epsilon(1e-3));
    CHECK(carriage().mean_pressure_kPa() == approx(31.0).epsilon(1e-3));
    CHECK(carriage().max_pressure_kPa() == approx(31.0).epsilon(1e-3));
    CHECK(tractor().mean_pressure_kPa() / carriage().mean_pressure_kPa() == approx(4.6).epsilon(0.01));
    CHECK_THROWS_AS(find_vehicle(vehicles(), "bulldozer"), DomainError);
}

TEST_CASE("index is linear in passes and quadratic in pressure") {
    const auto corpus = generate_corpus(kDefaultSeed);
    const FieldPolygon& f = find_field(corpus, "field_001");
    const StripPlan plan = best_orientation(f, 50, 1.5);
    const auto one = compaction_metrics(f, tractor(), &plan, 1);
    const auto four = compaction_metrics(f, tractor(), &plan, 4);
    CHECK(four.contact_energy_index == approx(4.0 * one.contact_energy_index));
    CHECK_THROWS_AS(compaction_metrics(f, tractor(), &plan, 0), DomainError);
    CHECK_THROWS_AS(compaction_metrics(f, carriage(), nullptr, 1), DomainError);

    VehicleFootprint heavy = tractor();
    heavy.total_mass_kg *= 1.5;
    CHECK(compaction_metrics(f, heavy, &plan, 1).contact_energy_index ==
          approx(2.25 * one.contact_energy_index));
}

TEST_CASE("field_001 summary") {
    const auto corpus = generate_corpus(kDefaultSeed);
    const FieldPolygon& f = find_field(corpus, "field_001");
    const CompactionReport r = compare(f, best_orientation(f, 50, 1.5), tractor(), carriage());
    CHECK(r.tractor.compacted_fraction == approx(0.50));
    CHECK(r.area_reduction >= 0.97);
    CHECK(r.area_reduction <= 0.99);
    CHECK(r.carriage.compacted_fraction == approx(0.008).epsilon(0.25));
}

TEST_CASE("every corpus field") {
    std::vector<double> concave;
    for (const auto& f : generate_corpus(kDefaultSeed)) {
        const CompactionReport r = compare(f, best_orientation(f, 50, 1.5), tractor(), carriage());
        CAPTURE(f.id);
        CHECK(r.energy_index_reduction == approx(73.0).epsilon(0.20));
        CHECK(r.carriage.compacted_fraction < 0.03);
        if (f.cls == FieldClass::IrregularConcave) concave.push_back(r.carriage.compacted_fraction);
    }
    CHECK(median(concave) == approx(0.014).epsilon(0.005 / 0.014));
}
