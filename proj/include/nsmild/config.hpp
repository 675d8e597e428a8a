#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nsmild {

// Flat key-value configuration with dotted section names, e.g.
//   grid.n = 32
//   solver.step = 0.00390625
//   sweep.r = 0 0.3 0.6 0.9
struct ExperimentConfig {
    std::string kind = "all";  // simulate | verify-weak | kato | kernels | holder | all
    bool quick = false;        // reduced scales for smoke/determinism runs

    // grid
    int grid_m = 3;
    int grid_n = 32;
    double grid_l = 6.283185307179586476925286766559;  // 2 pi

    // solver
    double step = 1.0 / 256.0;
    double final_time = 0.5;
    double inner_tolerance = 1e-10;
    int max_inner_iterations = 50;
    std::string scheme = "exponential_trapezoid";
    bool nonlinearity = true;
    std::string initial_data = "taylor_green";  // taylor_green | single_mode | random

    // sweeps
    std::vector<double> sweep_r = {0.0, 0.3, 0.6, 0.9};
    std::vector<double> sweep_p = {1.5};
    std::vector<double> sweep_t = {0.125, 0.25, 0.5};
    std::vector<double> sweep_h;        // offsets; empty = module defaults
    std::vector<double> sweep_lambda;   // empty = dyadic ladder 2^-1..2^-10
    int seeds = 20;

    // tolerances / misc
    double quad_tol = 1e-8;
    std::string out_dir = "out";
    std::uint64_t seed = 1;
    std::string format = "csv";

    static ExperimentConfig from_text(const std::string& text);
    static ExperimentConfig from_file(const std::string& path);
    std::string to_text() const;
    void validate() const;
};

} // namespace nsmild
