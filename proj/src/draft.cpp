#include "cabletract/draft.hpp"

#include <algorithm>
#include <map>

#include "cabletract/io.hpp"

namespace cabletract {

Soil parse_soil(const std::string& s) {
    if (s == "fine") return Soil::Fine;
    if (s == "medium") return Soil::Medium;
    if (s == "coarse") return Soil::Coarse;
    throw DomainError("unknown soil class '" + s + "'");
}

std::vector<Implement> load_implements(const std::string& path) {
    const CsvTable t = read_csv(path.empty() ? data_path("implements_d497.csv") : path);
    std::vector<Implement> out;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        Implement m;
        m.name = t.at(i, "name");
        m.operation_class = t.at(i, "class");
        m.library = t.at(i, "library");
        m.pair = t.col("pair") >= 0 ? t.at(i, "pair") : m.name;
        m.A = t.num(i, "A");
        m.B = t.num(i, "B");
        m.C = t.num(i, "C");
        m.width_units = t.num(i, "width_units");
        m.depth_cm = t.num(i, "depth_cm");
        m.Fi[0] = t.num(i, "Fi_fine");
        m.Fi[1] = t.num(i, "Fi_medium");
        m.Fi[2] = t.num(i, "Fi_coarse");
        m.v_lo = t.num(i, "v_lo");
        m.v_hi = t.num(i, "v_hi");
        if (m.A < 0 || !(m.width_units > 0) || m.depth_cm < 0 || !(m.v_lo < m.v_hi))
            throw DomainError("implement " + m.name + ": invalid row");
        out.push_back(m);
    }
    return out;
}

const Implement& find_implement(const std::vector<Implement>& lib, const std::string& name) {
    for (const auto& m : lib)
        if (m.name == name) return m;
    throw DomainError("unknown implement '" + name + "'");
}

double d497_draft(const Implement& impl, double v, double depth_cm, Soil soil) {
    if (v < 0 || v > 15) throw DomainError("speed outside [0,15] km/h");
    const double f = impl.Fi[static_cast<int>(soil)];
    return f * (impl.A + impl.B * v + impl.C * v * v) * impl.width_units * depth_cm;
}

std::vector<double> draft_samples(const Implement& impl, std::size_t n, std::uint64_t seed,
                                  Soil soil) {
    if (n == 0) throw DomainError("sample count must be >= 1");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rng g(stream_seed(seed, i));
        double v = uniform(g, 1.0, 4.0);
        if (impl.codesigned()) v = std::clamp(v, impl.v_lo, impl.v_hi);
        const double t = std::max(1.0, uniform(g, impl.depth_cm - 5.0, impl.depth_cm + 5.0));
        const double theta = uniform(g, 0.12, 0.28);
        out[i] = d497_draft(impl, v, t, soil) * moisture_multiplier(theta);
    }
    return out;
}

DraftDistribution sample_drafts(const Implement& impl, std::size_t n, std::uint64_t seed, Soil soil) {
    const auto s = draft_samples(impl, n, seed, soil);
    return {impl.name, percentile(s, 0.10), percentile(s, 0.50), percentile(s, 0.90), n};
}

ReductionReport library_reduction_report(const std::vector<DraftDistribution>& conventional,
                                         const std::vector<DraftDistribution>& codesigned,
                                         const std::vector<Implement>& lib) {
    auto key = [&](const std::string& name) { return find_implement(lib, name).pair; };
    std::map<std::string, const DraftDistribution*> cd;
    for (const auto& d : codesigned) cd[key(d.implement)] = &d;
    if (cd.size() != conventional.size()) throw DomainError("libraries cover different operations");
    ReductionReport r;
    std::vector<double> ratios;
    for (const auto& c : conventional) {
        auto it = cd.find(key(c.implement));
        if (it == cd.end()) throw DomainError("unpaired operation '" + key(c.implement) + "'");
        const double ratio = it->second->p50_N / c.p50_N;
        r.rows.push_back({it->first, c.implement, it->second->implement, c.p50_N, it->second->p50_N, ratio});
        ratios.push_back(ratio);
    }
    r.median_ratio = median(ratios);
    return r;
}

}  // namespace cabletract
