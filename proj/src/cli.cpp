#include "cabletract/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "cabletract/climate.hpp"
#include "cabletract/compaction.hpp"
#include "cabletract/core.hpp"
#include "cabletract/draft.hpp"
#include "cabletract/econ.hpp"
#include "cabletract/envelope.hpp"
#include "cabletract/fields.hpp"
#include "cabletract/io.hpp"
#include "cabletract/physics.hpp"
#include "cabletract/planner.hpp"
#include "cabletract/powersim.hpp"
#include "cabletract/uq.hpp"
#include "cabletract/variants.hpp"

namespace cabletract {
namespace {

namespace fs = std::filesystem;
using Row = std::vector<std::string>;

constexpr int kMonteCarloSamples = 2048;
constexpr double kReferenceFarmHa = 25.0;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string istr(long v) { return std::to_string(v); }

struct Context {
    fs::path out;
    std::uint64_t seed = kDefaultSeed;
    ScenarioParams params;
    std::string comment;
    std::vector<fs::path> written;

    CsvWriter open(const std::string& rel, const Row& header) {
        const fs::path path = out / rel;
        fs::create_directories(path.parent_path());
        written.push_back(path);
        return CsvWriter(path.string(), comment, header);
    }
};

// ---------------------------------------------------------------- physics

void cmd_physics(Context& ctx) {
    const auto cables = load_cables();

    {
        auto w = ctx.open("tables/drivetrain_chain.csv",
                          {"preset", "motor", "inverter", "gearbox", "drum", "pulley", "cable", "product"});
        for (const auto& [name, c] : {std::pair{"baseline", DrivetrainChain::baseline()},
                                      std::pair{"premium", DrivetrainChain::premium()}}) {
            w.row({name, fmt(c.motor_eff, 2), fmt(c.inverter_eff, 2), fmt(c.gearbox_eff, 2), fmt(c.drum_eff, 2),
                   fmt(c.pulley_eff, 2), fmt(c.cable_eff, 2), fmt(chain_efficiency(c), 4)});
        }
        w.close();
    }
    {
        auto w = ctx.open("tables/motor_power.csv", {"preset", "eta", "draft_N", "speed_kmh", "power_W"});
        const double etas[] = {chain_efficiency(DrivetrainChain::baseline()),
                               chain_efficiency(DrivetrainChain::premium())};
        const char* names[] = {"baseline", "premium"};
        for (int i = 0; i < 2; ++i)
            for (double f : {1800.0, 3000.0})
                w.row({names[i], fmt(etas[i], 4), fmt(f, 0), "1.5", fmt(motor_power(f, 1.5, etas[i]), 1)});
        w.close();
    }
    {
        auto w = ctx.open("tables/anchor_sizing.csv",
                          {"case", "reaction_N", "per_auger_capacity_N", "safety_factor", "augers"});
        struct Case {
            const char* name;
            double reaction, cap;
        };
        const Case cases[] = {{"reference_draft", 1800, 400},
                              {"peak_draft", 3000, 400},
                              {"heavy_primary", 14000, 400},
                              {"large_auger", 7250, 2000}};
        for (const auto& c : cases)
            w.row({c.name, fmt(c.reaction, 0), fmt(c.cap, 0), "1.15", istr(augers_required(c.reaction, c.cap, 1.15))});
        w.close();
    }
    {
        auto w = ctx.open("tables/cable_pretension.csv",
                          {"cable", "linear_weight_N_per_m", "span_m", "sag_budget_m", "min_tension_N"});
        for (const auto& c : cables)
            for (double L : {50.0, 100.0})
                w.row({c.name, fmt(c.linear_weight_N_per_m, 3), fmt(L, 0), "0.02",
                       fmt(min_tension_for_sag(c.linear_weight_N_per_m, L, 0.02), 0)});
        w.close();
    }
    {
        auto w = ctx.open("tables/tension_balance.csv",
                          {"cable", "draft_N", "span_m", "regime", "main_tension_N", "anchor_tension_N"});
        for (const auto& c : cables)
            for (double d : {600.0, 1800.0, 3000.0}) {
                const TensionBalance b = tension_balance(d, c, ctx.params.span_m, kPulleyHeightM, kClearanceMinM);
                w.row({c.name, fmt(d, 0), fmt(ctx.params.span_m, 0),
                       b.regime == Regime::DraftBound ? "draft_bound" : "sag_bound", fmt(b.main_tension_N, 1),
                       fmt(b.anchor_tension_N, 1)});
            }
        w.close();
    }
    {
        auto w = ctx.open("figdata/F1.csv", {"cable", "span_m", "tension_N", "sag_exact_m", "sag_parabolic_m"});
        for (const auto& c : cables)
            for (double L : {25.0, 50.0, 75.0, 100.0})
                for (double T = 500; T <= 30000; T += 500)
                    w.row({c.name, fmt(L, 0), fmt(T, 0), fmt(catenary_sag_exact(c.linear_weight_N_per_m, L, T), 5),
                           fmt(catenary_sag_parabolic(c.linear_weight_N_per_m, L, T), 5)});
        w.close();
    }
    {
        auto w = ctx.open("figdata/F2.csv", {"per_auger_capacity_N", "reaction_N", "augers", "installed_augers"});
        const AnchorEnvelope env;
        for (double cap : {400.0, 2000.0})
            for (double r = 250; r <= 15000; r += 250)
                w.row({fmt(cap, 0), fmt(r, 0), istr(augers_required(r, cap, env.safety_factor)),
                       istr(env.installed_augers)});
        w.close();
    }
    {
        auto w = ctx.open("figdata/F3.csv", {"preset", "speed_kmh", "draft_N", "power_W"});
        const std::pair<const char*, double> presets[] = {
            {"baseline", chain_efficiency(DrivetrainChain::baseline())},
            {"premium", chain_efficiency(DrivetrainChain::premium())}};
        for (const auto& [name, eta] : presets)
            for (double v : {1.0, 1.5, 2.0, 3.0})
                for (double f = 500; f <= 4000; f += 100)
                    w.row({name, fmt(v, 1), fmt(f, 0), fmt(motor_power(f, v, eta), 1)});
        w.close();
    }
}

// ---------------------------------------------------------------- draft

void cmd_draft(Context& ctx) {
    const auto lib = load_implements();
    std::vector<DraftDistribution> conv, codes;
    auto lib_w = ctx.open("tables/draft_library.csv",
                          {"implement", "class", "library", "pair", "p10_N", "p50_N", "p90_N", "samples"});
    auto f4 = ctx.open("figdata/F4.csv", {"implement", "library", "pair", "sample", "draft_N"});
    for (const Implement& impl : lib) {
        const auto samples = draft_samples(impl, kDraftSamples, ctx.seed);
        DraftDistribution d{impl.name, percentile(samples, 0.1), percentile(samples, 0.5), percentile(samples, 0.9),
                            samples.size()};
        lib_w.row({impl.name, impl.operation_class, impl.library, impl.pair, fmt(d.p10_N, 1), fmt(d.p50_N, 1),
                   fmt(d.p90_N, 1), istr(static_cast<long>(d.sample_count))});
        // Every fifth sample keeps the violin shape at a fifth of the size.
        for (std::size_t i = 0; i < samples.size(); i += 5)
            f4.row({impl.name, impl.library, impl.pair, istr(static_cast<long>(i)), fmt(samples[i], 1)});
        if (impl.library == "conventional") conv.push_back(d);
        if (impl.codesigned()) codes.push_back(d);
    }
    lib_w.close();
    f4.close();

    const ReductionReport rep = library_reduction_report(conv, codes, lib);
    auto w = ctx.open("tables/draft_reduction.csv",
                      {"pair", "conventional", "codesigned", "conventional_p50_N", "codesigned_p50_N", "ratio"});
    for (const auto& r : rep.rows)
        w.row({r.pair, r.conventional, r.codesigned, fmt(r.conventional_p50, 1), fmt(r.codesigned_p50, 1),
               fmt(r.ratio, 4)});
    w.row({"median", "", "", "", "", fmt(rep.median_ratio, 4)});
    w.close();

    auto f5 = ctx.open("figdata/F5.csv", {"implement", "library", "speed_kmh", "draft_N"});
    for (const Implement& impl : lib)
        for (double v = 1.0; v <= 8.0 + 1e-9; v += 0.25)
            f5.row({impl.name, impl.library, fmt(v, 2), fmt(d497_draft(impl, v, kSpeedSweepDepthCm, Soil::Medium), 1)});
    f5.close();
}

// ---------------------------------------------------------------- energy

void cmd_energy(Context& ctx, const std::string& site_filter) {
    const auto all_sites = load_sites();
    std::vector<SiteClimate> sites;
    if (site_filter.empty())
        sites = all_sites;
    else
        sites.push_back(find_site(all_sites, site_filter));

    const double intensity = energy_per_decare(ctx.params);
    const DutyCycle duty;
    const auto panels = linspace(4, 30, 14);
    const auto batteries = linspace(2, 24, 12);

    auto sites_w = ctx.open("tables/sites.csv", {"site", "latitude_deg", "published_ghi_kWh_m2", "synth_ghi_kWh_m2",
                                                 "deviation"});
    auto cov_w = ctx.open("tables/coverage.csv", {"site", "p10_dec_day", "p50_dec_day", "p90_dec_day", "grid_hours",
                                                  "grid_kWh", "harvest_kWh", "brightest_week_grid_kWh"});
    auto min_w = ctx.open("tables/feasibility_minimum.csv", {"site", "min_grid_hours", "panel_m2", "battery_kWh"});
    auto f6 = ctx.open("figdata/F6.csv", {"site", "day", "month", "decares"});
    auto f7 = ctx.open("figdata/F7.csv", {"site", "hour", "pv_W", "wind_W", "load_W", "soc", "grid_W"});
    auto f8 = ctx.open("figdata/F8.csv", {"site", "panel_m2", "battery_kWh", "grid_hours"});

    for (const SiteClimate& s : sites) {
        const HourlyWeather wx = synthesize_year(s, ctx.seed);
        const double ghi = wx.annual_ghi_kWh_m2();
        sites_w.row({s.name, fmt(s.latitude_deg, 2), fmt(s.published_ghi_kWh_m2_yr, 0), fmt(ghi, 1),
                     fmt(ghi / s.published_ghi_kWh_m2_yr - 1.0, 4)});

        const HourlyLedger led = simulate_year(wx, {}, {}, duty);
        const CoverageStats cs = daily_coverage_stats(led, intensity);
        const int bw = brightest_week_start(wx);
        cov_w.row({s.name, fmt(cs.p10, 3), fmt(cs.p50, 3), fmt(cs.p90, 3), istr(led.grid_hours()),
                   fmt(led.grid_kWh(), 1), fmt(led.harvest_kWh(), 1), fmt(grid_kWh_in_days(led, bw, 7), 3)});
        for (int d = 0; d < kDays; ++d)
            f6.row({s.name, istr(d + 1), istr(month_of_day(d + 1) + 1), fmt(cs.decares_per_day[d], 3)});
        for (int h = 0; h < 7 * 24; ++h) {
            const std::size_t i = static_cast<std::size_t>(bw) * 24 + h;
            f7.row({s.name, istr(h), fmt(led.pv_W[i], 1), fmt(led.wind_W[i], 1), fmt(led.load_W[i], 1),
                    fmt(led.soc[i], 4), fmt(led.grid_W[i], 1)});
        }

        const FeasibilityMap fm = feasibility_map(wx, panels, batteries, duty);
        int best = fm.minimum();
        std::string bp, bb;
        for (std::size_t i = 0; i < panels.size(); ++i)
            for (std::size_t j = 0; j < batteries.size(); ++j) {
                f8.row({s.name, fmt(panels[i], 2), fmt(batteries[j], 2), istr(fm.grid_hours[i][j])});
                if (bp.empty() && fm.grid_hours[i][j] == best) {
                    bp = fmt(panels[i], 2);
                    bb = fmt(batteries[j], 2);
                }
            }
        min_w.row({s.name, istr(best), bp, bb});
    }
    sites_w.close();
    cov_w.close();
    min_w.close();
    f6.close();
    f7.close();
    f8.close();
}

// ---------------------------------------------------------------- plan

void write_plan_pieces(CsvWriter& w, const StripPlan& plan) {
    for (const Strip& s : plan.strips)
        for (std::size_t k = 0; k < s.pieces.size(); ++k) {
            const FieldPolygon& poly = s.pieces[k].polygon;
            auto ring_rows = [&](const Ring& r, int ring) {
                for (std::size_t v = 0; v < r.size(); ++v)
                    w.row({plan.field_id, fmt(plan.orientation_deg, 1), istr(s.index), istr(static_cast<long>(k)),
                           istr(ring), istr(static_cast<long>(v)), fmt(r[v].x, 3), fmt(r[v].y, 3)});
            };
            ring_rows(poly.outer, 0);
            for (std::size_t h = 0; h < poly.holes.size(); ++h) ring_rows(poly.holes[h], static_cast<int>(h) + 1);
        }
}

void cmd_plan(Context& ctx, const std::string& field_filter) {
    const auto corpus = generate_corpus(ctx.seed);
    std::vector<const FieldPolygon*> fields;
    if (field_filter.empty())
        for (const auto& f : corpus) fields.push_back(&f);
    else
        fields.push_back(&find_field(corpus, field_filter));

    const double L = ctx.params.span_m, w_m = ctx.params.strip_width_m;

    auto corpus_w = ctx.open("tables/corpus.csv", {"field_id", "class", "area_ha", "vertices", "holes"});
    auto eff_w = ctx.open("tables/shape_efficiency.csv", {"field_id", "class", "orientation_deg", "eta", "strips",
                                                          "anchor_placements", "swept_m2", "field_m2"});
    auto f9 = ctx.open("figdata/F9.csv", {"field_id", "class", "orientation_deg", "eta"});
    auto f10 = ctx.open("figdata/F10.csv",
                        {"field_id", "orientation_deg", "strip", "piece", "ring", "vertex", "x_m", "y_m"});

    std::map<FieldClass, std::vector<double>> by_class;
    std::vector<double> all_eta;
    for (const FieldPolygon* f : fields) {
        corpus_w.row({f->id, to_string(f->cls), fmt(polygon_area(*f) / 1e4, 4),
                      istr(static_cast<long>(f->outer.size())), istr(static_cast<long>(f->holes.size()))});
        for (int k = 0; k < kOrientations; ++k) {
            const double deg = k * kOrientationStepDeg;
            f9.row({f->id, to_string(f->cls), fmt(deg, 1), fmt(decompose(*f, L, w_m, deg).eta, 5)});
        }
        const StripPlan best = best_orientation(*f, L, w_m);
        eff_w.row({f->id, to_string(f->cls), fmt(best.orientation_deg, 1), fmt(best.eta, 5),
                   istr(static_cast<long>(best.strips.size())), istr(best.anchor_placements),
                   fmt(best.swept_area_m2, 1), fmt(best.field_area_m2, 1)});
        write_plan_pieces(f10, best);
        by_class[f->cls].push_back(best.eta);
        all_eta.push_back(best.eta);
    }
    corpus_w.close();
    eff_w.close();
    f9.close();
    f10.close();

    auto cls_w = ctx.open("tables/eta_by_class.csv", {"class", "fields", "median_eta", "p10_eta", "p90_eta"});
    for (const auto& [cls, v] : by_class)
        cls_w.row({to_string(cls), istr(static_cast<long>(v.size())), fmt(median(v), 4), fmt(percentile(v, 0.1), 4),
                   fmt(percentile(v, 0.9), 4)});
    cls_w.row({"corpus", istr(static_cast<long>(all_eta.size())), fmt(median(all_eta), 4),
               fmt(percentile(all_eta, 0.1), 4), fmt(percentile(all_eta, 0.9), 4)});
    cls_w.close();

    if (!field_filter.empty()) return;

    const auto farm = load_farm(corpus);
    double farm_m2 = 0;
    for (const auto& f : farm) farm_m2 += polygon_area(f.field);
    const TimeBudget tb = farm_time_budget(farm, ctx.params);
    const double total = tb.operating_h + tb.setup_h + tb.travel_h;
    auto tb_w = ctx.open("tables/time_budget.csv", {"component", "hours", "share"});
    auto f11 = ctx.open("figdata/F11.csv", {"component", "hours", "share", "farm_ha"});
    const std::pair<const char*, double> parts[] = {
        {"operating", tb.operating_h}, {"setup", tb.setup_h}, {"travel", tb.travel_h}};
    for (const auto& [name, h] : parts) {
        tb_w.row({name, fmt(h, 4), fmt(h / total, 4)});
        f11.row({name, fmt(h, 4), fmt(h / total, 4), fmt(farm_m2 / 1e4, 3)});
    }
    tb_w.close();
    f11.close();

    const fs::path gj = ctx.out / "fields.geojson";
    ctx.written.push_back(gj);
    std::ofstream out(gj, std::ios::binary);
    out << to_geojson(corpus);
    if (!out) throw DomainError("cannot write " + gj.string());
}

// ---------------------------------------------------------------- compaction

void cmd_compaction(Context& ctx) {
    const auto vehicles = load_footprints();
    const VehicleFootprint& tractor = find_vehicle(vehicles, "tractor");
    const VehicleFootprint& carriage = find_vehicle(vehicles, "carriage");

    auto pw = ctx.open("tables/vehicle_pressures.csv",
                       {"vehicle", "element", "load_share", "patch_area_m2", "pressure_kPa"});
    for (const VehicleFootprint* v : {&tractor, &carriage}) {
        for (std::size_t i = 0; i < v->elements.size(); ++i)
            pw.row({v->name, v->elements[i].name, fmt(v->elements[i].load_share, 2),
                    fmt(v->elements[i].patch_area_m2, 6), fmt(v->element_pressure_kPa(i), 2)});
        pw.row({v->name, "load_weighted_mean", "", "", fmt(v->mean_pressure_kPa(), 2)});
        pw.row({v->name, "max", "", "", fmt(v->max_pressure_kPa(), 2)});
    }
    pw.close();

    const auto corpus = generate_corpus(ctx.seed);
    const auto farm = load_farm(corpus);
    const Row header = {"field_id",
                        "class",
                        "tractor_compacted_m2",
                        "tractor_fraction",
                        "carriage_compacted_m2",
                        "carriage_fraction",
                        "tractor_energy_index",
                        "carriage_energy_index",
                        "area_reduction",
                        "energy_index_reduction"};
    auto tw = ctx.open("tables/compaction.csv", header);
    Row f12_header = header;
    f12_header.push_back("farm_member");
    auto f12 = ctx.open("figdata/F12.csv", f12_header);
    for (const FieldPolygon& f : corpus) {
        const StripPlan plan = best_orientation(f, ctx.params.span_m, ctx.params.strip_width_m);
        const CompactionReport r = compare(f, plan, tractor, carriage);
        Row row = {f.id,
                   to_string(f.cls),
                   fmt(r.tractor.compacted_area_m2, 1),
                   fmt(r.tractor.compacted_fraction, 4),
                   fmt(r.carriage.compacted_area_m2, 1),
                   fmt(r.carriage.compacted_fraction, 5),
                   fmt(r.tractor.contact_energy_index, 1),
                   fmt(r.carriage.contact_energy_index, 1),
                   fmt(r.area_reduction, 4),
                   fmt(r.energy_index_reduction, 2)};
        const bool member = std::any_of(farm.begin(), farm.end(), [&](const FarmField& ff) { return ff.field.id == f.id; });
        if (member) tw.row(row);
        row.push_back(member ? "1" : "0");
        f12.row(row);
    }
    tw.close();
    f12.close();
}

// ---------------------------------------------------------------- econ

void cmd_econ(Context& ctx) {
    const ScenarioParams& p = ctx.params;
    {
        auto w = ctx.open("tables/econ_params.csv", {"parameter", "value"});
        for (const std::string& k : param_keys()) w.row({k, fmt(get_param(p, k), 6)});
        w.close();
    }
    {
        auto w = ctx.open("tables/capex.csv", {"item", "eur"});
        for (const CapexItem& it : p.capex_items) w.row({it.name, fmt(it.cents / 100.0, 2)});
        w.row({"total", fmt(capex_eur(p), 2)});
        w.close();
    }
    {
        const FarmSweep sw = farm_size_sweep(p);
        auto w = ctx.open("tables/npv_farm_size.csv",
                          {"farm_ha", "discount_rate", "npv_eur", "discounted_payback_yr", "reference"});
        for (std::size_t i = 0; i < sw.sizes_ha.size(); ++i)
            for (std::size_t j = 0; j < sw.rates.size(); ++j) {
                const CashflowResult cf = npv_vs_diesel(p, sw.sizes_ha[i], sw.rates[j]);
                const bool ref = sw.sizes_ha[i] == kReferenceFarmHa && sw.rates[j] == p.discount_rate;
                w.row({fmt(sw.sizes_ha[i], 0), fmt(sw.rates[j], 2), fmt(sw.npv[i][j], 1),
                       cf.discounted_payback_yr ? fmt(*cf.discounted_payback_yr, 3) : "never", ref ? "1" : "0"});
            }
        w.close();
    }
    {
        auto w = ctx.open("figdata/F16.csv", {"farm_ha", "discount_rate", "npv_eur", "discounted_payback_yr"});
        for (double rate : {0.05, 0.08, 0.12})
            for (double ha : logspace(1, 100, 60)) {
                const CashflowResult cf = npv_vs_diesel(p, ha, rate);
                w.row({fmt(ha, 4), fmt(rate, 2), fmt(cf.npv_eur, 1),
                       cf.discounted_payback_yr ? fmt(*cf.discounted_payback_yr, 4) : "never"});
            }
        w.close();
    }
    {
        const LcaResult lca = lifecycle_co2(p, kReferenceFarmHa);
        auto w = ctx.open("tables/lca.csv", {"vehicle", "embodied_kg_per_ha_yr", "operational_kg_per_ha_yr",
                                             "total_kg_per_ha_yr"});
        auto f17 = ctx.open("figdata/F17.csv", {"vehicle", "component", "kg_co2_per_ha_yr"});
        for (const LcaRow* r : {&lca.cabletract, &lca.diesel, &lca.electric}) {
            w.row({r->vehicle, fmt(r->embodied_kg_per_ha_yr, 3), fmt(r->operational_kg_per_ha_yr, 3),
                   fmt(r->total(), 3)});
            f17.row({r->vehicle, "embodied", fmt(r->embodied_kg_per_ha_yr, 3)});
            f17.row({r->vehicle, "operational", fmt(r->operational_kg_per_ha_yr, 3)});
        }
        w.close();
        f17.close();
    }
    {
        // Reference vehicles from the bundled sheet; the CableTract row is computed here.
        const CsvTable t = read_csv(data_path("competitors.csv"));
        const Row header = {"vehicle", "form_factor", "powertrain", "rated_kW", "energy_kWh_per_ha", "capex_eur",
                            "payback_yr", "off_grid"};
        auto w = ctx.open("tables/competitor_comparison.csv", header);
        auto f18 = ctx.open("figdata/F18.csv", {"vehicle", "energy_kWh_per_ha", "capex_eur", "off_grid"});
        const CashflowResult cf = npv_vs_diesel(p, kReferenceFarmHa, p.discount_rate);
        const double kw = motor_power(p.draft_load_N + p.carriage_load_N + p.system_travel_load_N,
                                      p.operating_speed_kmh, p.drivetrain_efficiency) / 1000.0;
        const std::string ekwh = fmt(energy_per_decare(p) / 100.0, 2);  // Wh/decare to kWh/ha
        w.row({"CableTract", "cable-driven 2-module", "PV+wind+battery", fmt(kw, 2), ekwh, fmt(capex_eur(p), 0),
               cf.discounted_payback_yr ? fmt(*cf.discounted_payback_yr, 2) : "never", "yes"});
        f18.row({"CableTract", ekwh, fmt(capex_eur(p), 0), "yes"});
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            Row r;
            for (const std::string& h : header) r.push_back(t.at(i, h));
            w.row(r);
            f18.row({t.at(i, "vehicle"), t.at(i, "energy_kWh_per_ha"), t.at(i, "capex_eur"), t.at(i, "off_grid")});
        }
        w.close();
        f18.close();
    }
}

// ---------------------------------------------------------------- uq

void cmd_uq(Context& ctx, bool sobol, bool mc, bool torn) {
    const Problem problem = load_problem();
    validate(problem);
    const Model model = scenario_model(ctx.params, problem);
    const auto& outs = output_names();

    {
        auto w = ctx.open("tables/uq_problem.csv", {"parameter", "lower", "upper", "units", "default"});
        for (const auto& u : problem)
            w.row({u.name, fmt(u.lower, 4), fmt(u.upper, 4), u.units, fmt(get_param(ctx.params, u.name), 4)});
        w.close();
    }
    if (sobol) {
        const SobolResult s = sobol_indices(problem, model, kSobolBase, ctx.seed);
        auto w = ctx.open("tables/sobol.csv", {"parameter", "output", "S1", "ST", "n_base", "evaluations"});
        auto f13 = ctx.open("figdata/F13.csv", {"parameter", "output", "S1", "ST"});
        for (std::size_t i = 0; i < problem.size(); ++i)
            for (std::size_t j = 0; j < outs.size(); ++j) {
                const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
                w.row({problem[i].name, outs[j], fmt(s.S1(ii, jj), 5), fmt(s.ST(ii, jj), 5), istr(s.n_base),
                       istr(s.evaluations)});
                f13.row({problem[i].name, outs[j], fmt(s.S1(ii, jj), 5), fmt(s.ST(ii, jj), 5)});
            }
        w.close();
        f13.close();
    }
    if (mc) {
        const McResult r = monte_carlo(problem, model, kMonteCarloSamples, ctx.seed);
        auto w = ctx.open("tables/mc_summary.csv", {"output", "p10", "p50", "p90", "samples"});
        for (std::size_t j = 0; j < outs.size(); ++j)
            w.row({outs[j], fmt(r.p10[j], 4), fmt(r.p50[j], 4), fmt(r.p90[j], 4), istr(kMonteCarloSamples)});
        w.close();
        Row header = {"sample"};
        for (const auto& u : problem) header.push_back(u.name);
        for (const auto& o : outs) header.push_back(o);
        auto f15 = ctx.open("figdata/F15.csv", header);
        for (Eigen::Index i = 0; i < r.samples.rows(); ++i) {
            Row row = {istr(static_cast<long>(i))};
            for (Eigen::Index k = 0; k < r.samples.cols(); ++k) row.push_back(fmt(r.samples(i, k), 6));
            for (Eigen::Index k = 0; k < r.outputs.cols(); ++k) row.push_back(fmt(r.outputs(i, k), 4));
            f15.row(row);
        }
        f15.close();
    }
    if (torn) {
        const double base = gross_npv(ctx.params);
        const auto bars = tornado(ctx.params, problem);
        auto w = ctx.open("tables/tornado.csv", {"parameter", "low_value", "high_value", "npv_low_eur",
                                                 "npv_high_eur", "swing_eur", "baseline_npv_eur"});
        auto f14 = ctx.open("figdata/F14.csv", {"rank", "parameter", "npv_low_eur", "npv_high_eur", "baseline_npv_eur"});
        for (std::size_t i = 0; i < bars.size(); ++i) {
            const TornadoBar& b = bars[i];
            w.row({b.name, fmt(b.low_value, 4), fmt(b.high_value, 4), fmt(b.npv_low, 1), fmt(b.npv_high, 1),
                   fmt(b.swing(), 1), fmt(base, 1)});
            f14.row({istr(static_cast<long>(i + 1)), b.name, fmt(b.npv_low, 1), fmt(b.npv_high, 1), fmt(base, 1)});
        }
        w.close();
        f14.close();
    }
}

// ---------------------------------------------------------------- variants

void cmd_variants(Context& ctx) {
    const auto rows = compare_variants(ctx.params);
    const RunResult& base = rows.front().result;
    const Row header = {"variant",        "throughput_dec_day", "energy_Wh_per_dec",   "capex_eur",
                        "payback_months", "surplus_W",          "throughput_ratio",    "energy_ratio",
                        "capex_ratio",    "payback_ratio"};
    auto w = ctx.open("tables/variants.csv", header);
    auto f20 = ctx.open("figdata/F20.csv", header);
    for (const VariantRow& v : rows) {
        const RunResult& r = v.result;
        const Row row = {v.name,
                         fmt(r.throughput_decares_per_day, 3),
                         fmt(r.energy_Wh_per_decare, 2),
                         fmt(r.capex_eur, 2),
                         fmt(r.simple_payback_months, 2),
                         fmt(r.surplus_power_W, 1),
                         fmt(r.throughput_decares_per_day / base.throughput_decares_per_day, 4),
                         fmt(r.energy_Wh_per_decare / base.energy_Wh_per_decare, 4),
                         fmt(r.capex_eur / base.capex_eur, 4),
                         fmt(r.simple_payback_months / base.simple_payback_months, 4)};
        w.row(row);
        f20.row(row);
    }
    w.close();
    f20.close();

    const CsvTable t = read_csv(data_path("variants_status.csv"));
    auto sw = ctx.open("tables/variants_status.csv", {"variant", "description", "status"});
    auto f19 = ctx.open("figdata/F19.csv", {"variant", "status", "implemented"});
    const auto names = variant_names();
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const std::string& n = t.at(i, "variant");
        sw.row({n, t.at(i, "description"), t.at(i, "status")});
        const bool impl = std::find(names.begin(), names.end(), n) != names.end();
        f19.row({n, t.at(i, "status"), impl ? "1" : "0"});
    }
    sw.close();
    f19.close();
}

// ---------------------------------------------------------------- envelope

void cmd_envelope(Context& ctx) {
    const EnvelopeGrid g = sweep(ctx.params);
    auto f21 = ctx.open("figdata/F21.csv", {"ghi_kWh_m2_yr", "farm_ha_per_yr", "annual_demand_kWh",
                                            "annual_harvest_kWh", "surplus_kWh", "grid_share", "npv_eur",
                                            "payback_yr"});
    std::size_t positive = 0, offgrid = 0;
    std::vector<double> paybacks;
    for (const EnvelopeCell& c : g.cells) {
        f21.row({fmt(c.ghi_kWh_m2_yr, 3), fmt(c.farm_ha_per_yr, 5), fmt(c.annual_demand_kWh, 2),
                 fmt(c.annual_harvest_kWh, 2), fmt(c.surplus_kWh, 2), fmt(c.grid_share, 5), fmt(c.npv_eur, 2),
                 c.payback_yr ? fmt(*c.payback_yr, 4) : "never"});
        if (c.npv_eur > 0) ++positive;
        if (c.surplus_kWh >= 0) ++offgrid;
        if (c.payback_yr) paybacks.push_back(*c.payback_yr);
    }
    f21.close();

    const double n = static_cast<double>(g.cells.size());
    auto w = ctx.open("tables/envelope_summary.csv", {"metric", "value"});
    w.row({"cells", istr(static_cast<long>(g.cells.size()))});
    w.row({"npv_positive_share", fmt(positive / n, 4)});
    w.row({"off_grid_share", fmt(offgrid / n, 4)});
    w.row({"median_payback_yr", paybacks.empty() ? "nan" : fmt(median(paybacks), 4)});
    w.row({"max_payback_yr",
           paybacks.empty() ? "nan" : fmt(*std::max_element(paybacks.begin(), paybacks.end()), 4)});
    w.close();

    auto sw = ctx.open("tables/envelope_sites.csv", {"site", "ghi_kWh_m2_yr", "farm_ha", "demand_kWh", "harvest_kWh",
                                                     "surplus_kWh", "npv_eur", "payback_yr"});
    for (const SiteClimate& s : load_sites()) {
        const EnvelopeCell c = envelope_cell(ctx.params, s.published_ghi_kWh_m2_yr, kReferenceFarmHa);
        sw.row({s.name, fmt(c.ghi_kWh_m2_yr, 0), fmt(kReferenceFarmHa, 0), fmt(c.annual_demand_kWh, 1),
                fmt(c.annual_harvest_kWh, 1), fmt(c.surplus_kWh, 1), fmt(c.npv_eur, 1),
                c.payback_yr ? fmt(*c.payback_yr, 3) : "never"});
    }
    sw.close();
}

void cmd_core(Context& ctx) {
    const RunResult r = run_single(ctx.params);
    auto w = ctx.open("tables/reference_run.csv", {"metric", "value"});
    w.row({"throughput_dec_day", fmt(r.throughput_decares_per_day, 4)});
    w.row({"time_limited_dec_day", fmt(r.time_limited_decares, 4)});
    w.row({"energy_limited_dec_day", fmt(r.energy_limited_decares, 4)});
    w.row({"energy_Wh_per_dec", fmt(r.energy_Wh_per_decare, 3)});
    w.row({"capex_eur", fmt(r.capex_eur, 2)});
    w.row({"simple_payback_months", fmt(r.simple_payback_months, 3)});
    w.row({"surplus_W", fmt(r.surplus_power_W, 2)});
    w.close();
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"CableTract feasibility engine: regenerates tables/ and figdata/ CSVs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", CABLETRACT_VERSION);

    std::uint64_t seed = kDefaultSeed;
    std::string out_dir = "out";
    std::string params_file;
    app.add_option("--seed", seed, "Root seed for every random stream")->capture_default_str();
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    app.add_option("--params", params_file, "key=value parameter override file")->check(CLI::ExistingFile);

    auto* all = app.add_subcommand("all", "Regenerate every table and figure-data file");
    auto* physics = app.add_subcommand("physics", "Cable sag, anchors, drivetrain and motor sizing");
    auto* draft = app.add_subcommand("draft", "Draft library distributions and reductions");
    auto* energy = app.add_subcommand("energy", "Climate synthesis, hourly dispatch and feasibility maps");
    std::string site;
    energy->add_option("--site", site, "Restrict to one bundled site");
    auto* plan = app.add_subcommand("plan", "Strip decomposition over the field corpus");
    std::string field;
    plan->add_option("--field", field, "Restrict to one corpus field id");
    auto* compaction = app.add_subcommand("compaction", "Tractor versus carriage compaction");
    auto* econ = app.add_subcommand("econ", "NPV sweep, LCA and competitor table");
    auto* uq = app.add_subcommand("uq", "Sobol indices, Monte Carlo envelope and tornado");
    bool do_sobol = false, do_mc = false, do_tornado = false;
    uq->add_flag("--sobol", do_sobol, "Sobol indices only");
    uq->add_flag("--mc", do_mc, "Monte Carlo envelope only");
    uq->add_flag("--tornado", do_tornado, "Tornado only");
    auto* variants = app.add_subcommand("variants", "Architectural variant comparison");
    auto* envelope = app.add_subcommand("envelope", "GHI by farm-size operating envelope");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    Context ctx;
    ctx.out = out_dir;
    ctx.seed = seed;
    try {
        std::string params_text;
        if (!params_file.empty()) {
            std::ifstream in(params_file, std::ios::binary);
            std::stringstream ss;
            ss << in.rdbuf();
            params_text = ss.str();
            ctx.params = apply_overrides(ScenarioParams{}, params_text);
        }
        validate(ctx.params);
        ctx.comment = "seed=" + std::to_string(seed) + " params=" + (params_file.empty() ? "defaults" : hex64(fnv1a(params_text))) +
                      " version=" + CABLETRACT_VERSION;

        if (*all) {
            cmd_core(ctx);
            cmd_physics(ctx);
            cmd_draft(ctx);
            cmd_energy(ctx, "");
            cmd_plan(ctx, "");
            cmd_compaction(ctx);
            cmd_econ(ctx);
            cmd_uq(ctx, true, true, true);
            cmd_variants(ctx);
            cmd_envelope(ctx);
        } else if (*physics) {
            cmd_physics(ctx);
        } else if (*draft) {
            cmd_draft(ctx);
        } else if (*energy) {
            cmd_energy(ctx, site);
        } else if (*plan) {
            cmd_plan(ctx, field);
        } else if (*compaction) {
            cmd_compaction(ctx);
        } else if (*econ) {
            cmd_econ(ctx);
        } else if (*uq) {
            const bool any = do_sobol || do_mc || do_tornado;
            cmd_uq(ctx, do_sobol || !any, do_mc || !any, do_tornado || !any);
        } else if (*variants) {
            cmd_variants(ctx);
        } else if (*envelope) {
            cmd_envelope(ctx);
        }
    } catch (const std::exception& e) {
        std::error_code ec;
        for (const fs::path& p : ctx.written) fs::remove(p, ec);
        std::cerr << "cabletract: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace cabletract
