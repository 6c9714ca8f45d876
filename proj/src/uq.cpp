#include "cabletract/uq.hpp"

#include <algorithm>
#include <cmath>

#include "cabletract/io.hpp"

namespace cabletract {

Problem load_problem(const std::string& path) {
    const CsvTable t = read_csv(path.empty() ? data_path("uq_problem.csv") : path);
    Problem p;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        p.push_back({t.at(i, "name"), t.num(i, "lower"), t.num(i, "upper"), t.at(i, "units")});
    validate(p);
    return p;
}

void validate(const Problem& problem) {
    if (problem.empty()) throw DomainError("empty uncertainty problem");
    for (const auto& u : problem)
        if (!(u.lower < u.upper)) throw DomainError("parameter " + u.name + ": lower must be below upper");
}

const std::vector<std::string>& output_names() {
    static const std::vector<std::string> n{"throughput_decares_per_day", "energy_Wh_per_decare",
                                            "simple_payback_months", "surplus_power_W"};
    return n;
}

Eigen::VectorXd evaluate_outputs(const ScenarioParams& base, const Problem& problem, const Eigen::VectorXd& x) {
    ScenarioParams p = base;
    for (std::size_t j = 0; j < problem.size(); ++j) set_param(p, problem[j].name, x(static_cast<Eigen::Index>(j)));
    const RunResult r = run_single(p);
    Eigen::VectorXd y(4);
    y << r.throughput_decares_per_day, r.energy_Wh_per_decare, r.simple_payback_months, r.surplus_power_W;
    return y;
}

Model scenario_model(const ScenarioParams& base, const Problem& problem) {
    return [base, problem](const Eigen::VectorXd& x) { return evaluate_outputs(base, problem, x); };
}

Eigen::MatrixXd sample_uniform(const Problem& problem, int n, std::uint64_t seed) {
    const auto k = static_cast<Eigen::Index>(problem.size());
    Eigen::MatrixXd m(n, k);
    for (int i = 0; i < n; ++i) {
        Rng g(stream_seed(seed, static_cast<std::uint64_t>(i)));
        for (Eigen::Index j = 0; j < k; ++j) m(i, j) = uniform(g, problem[j].lower, problem[j].upper);
    }
    return m;
}

namespace {

Eigen::MatrixXd evaluate_rows(const Model& model, const Eigen::MatrixXd& X) {
    Eigen::MatrixXd Y;
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
        const Eigen::VectorXd y = model(X.row(i).transpose());
        if (i == 0) Y.resize(X.rows(), y.size());
        Y.row(i) = y.transpose();
    }
    return Y;
}

double variance(const Eigen::VectorXd& v) {
    const double mu = v.mean();
    return (v.array() - mu).square().sum() / static_cast<double>(v.size());
}

}  // namespace

McResult monte_carlo(const Problem& problem, const Model& model, int n, std::uint64_t seed) {
    if (n < 2) throw DomainError("Monte Carlo needs at least 2 samples");
    validate(problem);
    McResult r;
    r.samples = sample_uniform(problem, n, seed);
    r.outputs = evaluate_rows(model, r.samples);
    for (Eigen::Index c = 0; c < r.outputs.cols(); ++c) {
        std::vector<double> col(r.outputs.col(c).data(), r.outputs.col(c).data() + n);
        r.p10.push_back(percentile(col, 0.10));
        r.p50.push_back(percentile(col, 0.50));
        r.p90.push_back(percentile(col, 0.90));
    }
    return r;
}

SobolResult sobol_indices(const Problem& problem, const Model& model, int n_base, std::uint64_t seed) {
    if (n_base < 2 || (n_base & (n_base - 1)) != 0) throw DomainError("Sobol base sample count must be a power of two");
    validate(problem);
    const auto k = static_cast<Eigen::Index>(problem.size());
    // A and B are the two halves of one 2k-column design.
    Problem doubled = problem;
    doubled.insert(doubled.end(), problem.begin(), problem.end());
    const Eigen::MatrixXd AB = sample_uniform(doubled, n_base, seed);
    const Eigen::MatrixXd A = AB.leftCols(k), B = AB.rightCols(k);

    SobolResult r;
    r.n_base = n_base;
    const Eigen::MatrixXd fA = evaluate_rows(model, A);
    const Eigen::MatrixXd fB = evaluate_rows(model, B);
    r.evaluations = 2L * n_base;
    const Eigen::Index m = fA.cols();
    r.S1.setZero(k, m);
    r.ST.setZero(k, m);
    for (Eigen::Index i = 0; i < k; ++i) {
        Eigen::MatrixXd ABi = A, BAi = B;
        ABi.col(i) = B.col(i);
        BAi.col(i) = A.col(i);
        const Eigen::MatrixXd fABi = evaluate_rows(model, ABi);
        const Eigen::MatrixXd fBAi = evaluate_rows(model, BAi);
        r.evaluations += 2L * n_base;
        for (Eigen::Index o = 0; o < m; ++o) {
            Eigen::VectorXd all(2 * n_base);
            all << fA.col(o), fB.col(o);
            const double V = variance(all);
            if (V <= 0) continue;  // constant output: indices stay zero
            const Eigen::ArrayXd a = fA.col(o).array(), b = fB.col(o).array();
            const Eigen::ArrayXd abi = fABi.col(o).array(), bai = fBAi.col(o).array();
            // Saltelli 2010 first order, symmetrised over the (A, B) roles.
            const double s1 = 0.5 * ((b * (abi - a)).mean() + (a * (bai - b)).mean()) / V;
            // Jansen total order, symmetrised likewise.
            const double st = 0.5 * ((a - abi).square().mean() + (b - bai).square().mean()) / (2.0 * V);
            r.S1(i, o) = s1;
            r.ST(i, o) = st;
        }
    }
    return r;
}

double gross_npv(const ScenarioParams& p, const DieselReference& ref) {
    const RunResult r = run_single(p);
    const double ha = r.throughput_decares_per_day * p.op_days_per_yr / 10.0;
    if (!(ha > 0)) return -(capex_eur(p) - ref.capex_eur);
    return npv_vs_diesel(p, ha, p.discount_rate, ref).npv_eur;
}

std::vector<TornadoBar> tornado(const ScenarioParams& p, const Problem& problem, const DieselReference& ref) {
    std::vector<TornadoBar> bars;
    for (const auto& u : problem) {
        ScenarioParams lo = p, hi = p;
        set_param(lo, u.name, u.lower);
        set_param(hi, u.name, u.upper);
        bars.push_back({u.name, u.lower, u.upper, gross_npv(lo, ref), gross_npv(hi, ref)});
    }
    std::stable_sort(bars.begin(), bars.end(), [](const TornadoBar& a, const TornadoBar& b) {
        if (a.swing() != b.swing()) return a.swing() > b.swing();
        return a.name < b.name;
    });
    return bars;
}

}  // namespace cabletract
