#include "cabletract/compaction.hpp"

#include <algorithm>

#include "cabletract/io.hpp"
#include "cabletract/physics.hpp"

namespace cabletract {

double VehicleFootprint::element_pressure_kPa(std::size_t i) const {
    const ContactElement& e = elements.at(i);
    return e.load_share * total_mass_kg * kGravity / e.patch_area_m2 / 1000.0;
}

double VehicleFootprint::mean_pressure_kPa() const {
    double s = 0;
    for (std::size_t i = 0; i < elements.size(); ++i) s += elements[i].load_share * element_pressure_kPa(i);
    return s;
}

double VehicleFootprint::max_pressure_kPa() const {
    double m = 0;
    for (std::size_t i = 0; i < elements.size(); ++i) m = std::max(m, element_pressure_kPa(i));
    return m;
}

double VehicleFootprint::rolling_width_m() const {
    double s = 0;
    for (const auto& e : elements) s += e.track_width_m;
    return s;
}

std::vector<VehicleFootprint> load_footprints(const std::string& path) {
    const CsvTable t = read_csv(path.empty() ? data_path("vehicle_footprints.csv") : path);
    std::vector<VehicleFootprint> out;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const std::string& name = t.at(i, "vehicle");
        if (out.empty() || out.back().name != name) {
            VehicleFootprint v;
            v.name = name;
            v.total_mass_kg = t.num(i, "mass_kg");
            const std::string& mode = t.at(i, "coverage_mode");
            if (mode == "full_field") v.mode = CoverageMode::FullField;
            else if (mode == "strip_midline") v.mode = CoverageMode::StripMidline;
            else throw DomainError("unknown coverage mode '" + mode + "'");
            v.coverage_fraction = t.num(i, "coverage_fraction");
            out.push_back(v);
        }
        ContactElement e{t.at(i, "element"), t.num(i, "load_share"), t.num(i, "patch_area_m2"),
                         t.num(i, "track_width_m")};
        if (!(e.patch_area_m2 > 0)) throw DomainError("non-positive patch area for " + name);
        out.back().elements.push_back(e);
    }
    for (const auto& v : out) {
        double s = 0;
        for (const auto& e : v.elements) s += e.load_share;
        if (std::abs(s - 1.0) > 1e-9) throw DomainError("load shares of " + v.name + " do not sum to 1");
    }
    return out;
}

const VehicleFootprint& find_vehicle(const std::vector<VehicleFootprint>& v, const std::string& name) {
    for (const auto& x : v)
        if (x.name == name) return x;
    throw DomainError("unknown vehicle '" + name + "'");
}

VehicleMetrics compaction_metrics(const FieldPolygon& field, const VehicleFootprint& veh, const StripPlan* plan,
                                  int passes) {
    if (passes < 1) throw DomainError("pass count must be at least 1");
    const double area = polygon_area(field);
    VehicleMetrics m;
    m.vehicle = veh.name;
    if (veh.mode == CoverageMode::FullField) {
        m.compacted_area_m2 = area * veh.coverage_fraction * passes;
    } else {
        if (!plan) throw DomainError("strip-midline coverage needs a strip plan");
        double path = 0;
        for (const Strip& s : plan->strips)
            for (const StripPiece& p : s.pieces) path += p.bounds_length_m;
        m.compacted_area_m2 = path * veh.rolling_width_m() * passes;
    }
    m.compacted_fraction = m.compacted_area_m2 / (area * passes);
    m.mean_pressure_kPa = veh.mean_pressure_kPa();
    double idx = 0;
    for (std::size_t i = 0; i < veh.elements.size(); ++i) {
        const double p = veh.element_pressure_kPa(i);
        idx += p * p * veh.elements[i].patch_area_m2;
    }
    m.contact_energy_index = idx * passes;
    return m;
}

CompactionReport compare(const FieldPolygon& field, const StripPlan& plan, const VehicleFootprint& tractor,
                         const VehicleFootprint& carriage, int passes) {
    CompactionReport r;
    r.field_id = field.id;
    r.tractor = compaction_metrics(field, tractor, &plan, passes);
    r.carriage = compaction_metrics(field, carriage, &plan, passes);
    r.area_reduction = std::max(0.0, 1.0 - r.carriage.compacted_area_m2 / r.tractor.compacted_area_m2);
    r.energy_index_reduction = r.tractor.contact_energy_index / r.carriage.contact_energy_index;
    return r;
}

}  // namespace cabletract
