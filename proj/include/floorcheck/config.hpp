#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace floorcheck {

// Shared run configuration (CLI flags mirror these fields).
struct RunConfig {
    int n_max = 20;              // certified branch range bound
    double epsilon = 1e-4;       // excluded sliver width at t = 0 and t = 1
    int grid_size = 512;         // falsifier scan grid
    int max_depth = 40;          // bisection depth cap
    double min_width = 1e-12;    // below this, subintervals become undecided slivers
    double tol_f = 1e-9;         // falsification tolerance (relative)
    std::uint64_t seed = 42;
    int threads = 0;             // 0 = machine parallelism
    std::vector<std::string> theorem_filter; // empty = all
    std::string format = "json"; // json | md

    // derivation checking
    int derivation_samples = 10000;
    int derivation_min_samples = 100;

    void validate() const {
        if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
        if (!(epsilon > 0.0 && epsilon < 0.5)) throw std::invalid_argument("epsilon must be in (0, 1/2)");
        if (grid_size < 16) throw std::invalid_argument("grid size must be >= 16");
        if (max_depth < 1) throw std::invalid_argument("max depth must be >= 1");
        if (min_width <= 0.0) throw std::invalid_argument("min width must be positive");
        if (tol_f <= 0.0) throw std::invalid_argument("tolerance must be positive");
        if (format != "json" && format != "md") throw std::invalid_argument("format must be json or md");
    }
};

} // namespace floorcheck
