#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cabletract {

enum class Soil { Fine, Medium, Coarse };
Soil parse_soil(const std::string& s);

struct Implement {
    std::string name;
    std::string operation_class;
    std::string library;  // conventional | codesigned
    std::string pair;     // operation key shared by a conventional/codesigned pair
    double A = 0, B = 0, C = 0;
    double width_units = 1;
    double depth_cm = 1;
    double Fi[3] = {1, 1, 1};  // fine, medium, coarse
    double v_lo = 1, v_hi = 4;

    bool codesigned() const { return library == "codesigned"; }
};

std::vector<Implement> load_implements(const std::string& path = "");
const Implement& find_implement(const std::vector<Implement>& lib, const std::string& name);

/// D = F_i (A + B v + C v^2) W T
double d497_draft(const Implement& impl, double speed_kmh, double depth_cm, Soil soil);

/// Moisture surrogate applied on top of F_i.
inline double moisture_multiplier(double theta) { return 1.0 + 0.8 * (theta - 0.20); }

struct DraftDistribution {
    std::string implement;
    double p10_N = 0, p50_N = 0, p90_N = 0;
    std::size_t sample_count = 0;
};

std::vector<double> draft_samples(const Implement& impl, std::size_t n, std::uint64_t seed,
                                  Soil soil = Soil::Medium);
DraftDistribution sample_drafts(const Implement& impl, std::size_t n, std::uint64_t seed,
                                Soil soil = Soil::Medium);

struct ReductionRow {
    std::string pair;
    std::string conventional, codesigned;
    double conventional_p50, codesigned_p50, ratio;
};

struct ReductionReport {
    std::vector<ReductionRow> rows;
    double median_ratio = 0;
};

/// Pairs rows by operation key; throws on an unpaired operation.
ReductionReport library_reduction_report(const std::vector<DraftDistribution>& conventional,
                                         const std::vector<DraftDistribution>& codesigned,
                                         const std::vector<Implement>& lib);

constexpr std::size_t kDraftSamples = 5000;
/// Working depth for the speed-dependence curves (medium soil).
constexpr double kSpeedSweepDepthCm = 20.0;

}  // namespace cabletract
