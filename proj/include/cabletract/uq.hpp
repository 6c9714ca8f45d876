#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cabletract/core.hpp"
#include "cabletract/econ.hpp"

namespace cabletract {

struct UncertainParameter {
    std::string name;  // core parameter key
    double lower = 0, upper = 0;
    std::string units;
};

using Problem = std::vector<UncertainParameter>;

Problem load_problem(const std::string& path = "");
void validate(const Problem& problem);

/// Model over a point in parameter space, returning one value per output.
using Model = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

const std::vector<std::string>& output_names();  // throughput, energy, payback, surplus

/// run_single with the problem's parameters overridden by x.
Eigen::VectorXd evaluate_outputs(const ScenarioParams& base, const Problem& problem, const Eigen::VectorXd& x);
Model scenario_model(const ScenarioParams& base, const Problem& problem);

/// Uniform samples scaled to the problem bounds; row i depends only on (seed, i).
Eigen::MatrixXd sample_uniform(const Problem& problem, int n, std::uint64_t seed);

struct McResult {
    Eigen::MatrixXd samples;  // n x k
    Eigen::MatrixXd outputs;  // n x m
    std::vector<double> p10, p50, p90;
};

McResult monte_carlo(const Problem& problem, const Model& model, int n, std::uint64_t seed);

struct SobolResult {
    Eigen::MatrixXd S1;  // k x m
    Eigen::MatrixXd ST;  // k x m
    int n_base = 0;
    long evaluations = 0;
};

constexpr int kSobolBase = 256;

/// Saltelli cross-sampling with A, B, AB_i and BA_i blocks: n_base * (2k + 2) evaluations.
SobolResult sobol_indices(const Problem& problem, const Model& model, int n_base, std::uint64_t seed);

struct TornadoBar {
    std::string name;
    double low_value, high_value;
    double npv_low, npv_high;
    double swing() const { return std::abs(npv_high - npv_low); }
};

/// NPV against diesel with the annual area at full daily capacity over the season.
double gross_npv(const ScenarioParams& p, const DieselReference& ref = {});

/// One-at-a-time bars sorted by swing (descending, ties by name).
std::vector<TornadoBar> tornado(const ScenarioParams& p, const Problem& problem, const DieselReference& ref = {});

}  // namespace cabletract
