#ifndef CACTUS_BENCH_HPP
#define CACTUS_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cactus {

struct BenchRecord {
    std::string op;
    int n = 0;            // actual vertex count of the timed instance
    double median_ns = 0; // median wall time over the repetitions
    int reps = 0;
    bool repair_free = true; // labelling ops: no repair search triggered
};

struct BenchReport {
    std::string op;
    std::vector<BenchRecord> records;
    double exponent = 0; // log-log least squares slope over the records
};

/// Times one operation on seeded generator corpora of roughly the requested
/// sizes. Known ops: decompose, sssp, apsp, dominate, cover2, mis, m2is,
/// mw2is, fvs, span-max, span-min, label-l21, label-l01, label-t21.
/// Repetitions are clamped up to five; medians are reported.
BenchReport run_bench(const std::string& op, const std::vector<int>& sizes,
                      std::uint64_t seed, int reps);

/// Least-squares slope of ln(time) against ln(n).
double fit_exponent(const std::vector<std::pair<double, double>>& n_time_points);

} // namespace cactus

#endif
