#include "approx.hpp"

#include "cabletract/core.hpp"
#include "cabletract/io.hpp"
#include "cabletract/physics.hpp"

using namespace cabletract;

TEST_CASE("default parameter set") {
    const ScenarioParams p;
    CHECK(p.span_m == 50.0);
    CHECK(p.strip_width_m == 1.5);
    CHECK(p.carriage_load_N == 600.0);
    CHECK(p.draft_load_N == 1800.0);
    CHECK(p.system_travel_load_N == 2200.0);
    CHECK(p.drivetrain_efficiency == 0.5);
    CHECK(p.pv_area_m2 == 15.0);
    CHECK(p.setup_time_s == 60.0);
    CHECK(p.battery_kWh == 9.0);
    CHECK(p.op_window_h_per_day == 10.0);
    CHECK(p.op_days_per_yr == 170.0);
    CHECK(p.diesel_l_per_decare == 1.2);
    CHECK(p.diesel_price_eur_per_l == 1.40);
    CHECK(p.horizon_yr == 15);
    CHECK(p.discount_rate == 0.08);
    CHECK_NOTHROW(validate(p));
}

TEST_CASE("capex is an exact cent sum") {
    const ScenarioParams p;
    CHECK(capex_cents(p) == 3557000);
    CHECK(capex_eur(p) == 35570.0);
}

TEST_CASE("validation rejects out-of-range fields") {
    ScenarioParams p;
    p.span_m = -1;
    CHECK_THROWS_AS(validate(p), DomainError);
    p = {};
    p.drivetrain_efficiency = 1.2;
    CHECK_THROWS_AS(validate(p), DomainError);
}

TEST_CASE("round energy") {
    const ScenarioParams p;
    const RoundEnergy e = round_energy(p);
    CHECK(e.mechanical_J == approx(123300.0));
    CHECK(e.electrical_J == approx(246600.0));

    ScenarioParams z;
    z.draft_load_N = z.carriage_load_N = z.system_travel_load_N = 0;
    CHECK(round_energy(z).mechanical_J == 0.0);
    CHECK(round_energy(z).electrical_J == 0.0);
}

TEST_CASE("energy intensity") {
    const ScenarioParams p;
    CHECK(energy_per_decare(p) == approx(921.0).epsilon(0.02));

    ScenarioParams wide = p;
    wide.strip_width_m *= 2;
    CHECK(energy_per_decare(wide) < energy_per_decare(p));

    ScenarioParams pure;
    pure.drivetrain_efficiency = 1.0;
    pure.carriage_load_N = 0;
    pure.system_travel_load_N = 0;
    pure.idle_power_W = 0;
    CHECK(energy_per_decare(pure) == approx(333.333).epsilon(1e-4));
}

TEST_CASE("energy intensity monotonicity") {
    ScenarioParams p;
    double prev = energy_per_decare(p);
    for (double eta = 0.55; eta <= 1.0; eta += 0.05) {
        p.drivetrain_efficiency = eta;
        const double e = energy_per_decare(p);
        CHECK(e <= prev);
        prev = e;
    }
    ScenarioParams q;
    prev = energy_per_decare(q);
    for (double d = 2000; d <= 6000; d += 500) {
        q.draft_load_N = d;
        const double e = energy_per_decare(q);
        CHECK(e >= prev);
        prev = e;
    }
}

TEST_CASE("daily time split") {
    ScenarioParams p;  // T_d = 36,000 s, t_s = 60 s
    const TimeSplit t = daily_time_split(p, 100);
    CHECK(t.usable_s == approx(30000));
    CHECK(t.operating_s == approx(24000));
    CHECK(t.travel_s == approx(6000));
    CHECK(daily_time_split(p, 0).usable_s == approx(36000));
    CHECK_THROWS_AS(daily_time_split(p, 600), DomainError);
    CHECK_THROWS_AS(daily_time_split(p, 700), DomainError);
}

TEST_CASE("run_single reference point") {
    const ScenarioParams p;
    const RunResult r = run_single(p);
    CHECK(r.throughput_decares_per_day == approx(11.5).epsilon(0.15));
    CHECK(r.energy_Wh_per_decare == approx(921.0).epsilon(0.02));
    CHECK(r.capex_eur == 35570.0);
    CHECK(r.surplus_power_W == approx(291.0).epsilon(0.35));
    CHECK(r.throughput_decares_per_day <= r.time_limited_decares + 1e-12);
}

TEST_CASE("run_single is pure") {
    const ScenarioParams p;
    const RunResult a = run_single(p), b = run_single(p);
    CHECK(a.throughput_decares_per_day == b.throughput_decares_per_day);
    CHECK(a.energy_Wh_per_decare == b.energy_Wh_per_decare);
    CHECK(a.simple_payback_months == b.simple_payback_months);
    CHECK(a.surplus_power_W == b.surplus_power_W);
}

TEST_CASE("no operating window gives no throughput") {
    ScenarioParams p;
    p.op_window_h_per_day = 0;
    CHECK(run_single(p).throughput_decares_per_day == 0.0);
}

TEST_CASE("baseline chain matches the lumped efficiency") {
    CHECK(chain_efficiency(DrivetrainChain::baseline()) ==
          approx(ScenarioParams{}.drivetrain_efficiency).epsilon(0.01));
}

TEST_CASE("parameter overrides") {
    const ScenarioParams p = apply_overrides({}, "# comment\nspan_m = 60\ncapex.battery=4000\n");
    CHECK(p.span_m == 60.0);
    CHECK(get_param(p, "capex.battery") == 4000.0);
    CHECK(capex_eur(p) == 35570.0 - 3420.0 + 4000.0);
    CHECK_THROWS_AS(apply_overrides({}, "nonsense_key=1"), DomainError);
    CHECK_THROWS_AS(apply_overrides({}, "span_m=abc"), DomainError);
    CHECK_THROWS_AS(apply_overrides({}, "span_m"), DomainError);
    for (const auto& k : param_keys()) CHECK_NOTHROW(get_param(ScenarioParams{}, k));
}

TEST_CASE("percentile helper") {
    CHECK(percentile({1, 2, 3, 4}, 0.5) == approx(2.5));
    CHECK(percentile({5, 1, 3}, 0.0) == 1.0);
    CHECK(percentile({5, 1, 3}, 1.0) == 5.0);
    CHECK(percentile({0, 10}, 0.1) == approx(1.0));
}
