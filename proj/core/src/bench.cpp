#include "cactus/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "cactus/decomposition.hpp"
#include "cactus/distances.hpp"
#include "cactus/generator.hpp"
#include "cactus/labelling.hpp"
#include "cactus/selection.hpp"

namespace cactus {

namespace {

Graph corpus_graph(int target_n, std::uint64_t seed) {
    GenSpec spec;
    spec.cycle_fraction = 0.4;
    spec.min_cycle_len = 3;
    spec.max_cycle_len = 8;
    // a block adds 2.4 vertices on average under this mix
    spec.block_count = std::max(1, static_cast<int>(target_n / 2.4));
    spec.seed = seed;
    return random_cactus(spec);
}

} // namespace

double fit_exponent(const std::vector<std::pair<double, double>>& pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [n, t] : pts) {
        double x = std::log(n), y = std::log(t);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double m = static_cast<double>(pts.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

BenchReport run_bench(const std::string& op, const std::vector<int>& sizes,
                      std::uint64_t seed, int reps) {
    reps = std::max(reps, 5);
    BenchReport report;
    report.op = op;

    for (size_t si = 0; si < sizes.size(); ++si) {
        Graph g = corpus_graph(sizes[si], seed + si);
        BlockCutTree t = decompose(g);
        const int n = g.vertex_count();
        bool repair_free = true;

        std::function<void()> body;
        if (op == "decompose") {
            body = [&] { BlockCutTree fresh = decompose(g); };
        } else if (op == "sssp") {
            body = [&] { sssp(g, t, 0); };
        } else if (op == "apsp") {
            body = [&] { apsp(g, t); };
        } else if (op == "dominate") {
            body = [&] { min_dominating_set(g, t); };
        } else if (op == "cover2") {
            body = [&] { min_2nc_set(g, t); };
        } else if (op == "mis") {
            body = [&] { max_independent_set(g, t); };
        } else if (op == "m2is") {
            body = [&] { max_2_independent_set(g, t); };
        } else if (op == "mw2is") {
            body = [&] { max_weight_2_colorable(g, t); };
        } else if (op == "fvs") {
            body = [&] { min_weight_fvs(g, t); };
        } else if (op == "span-max") {
            body = [&] { max_height_spanning_tree(g, t); };
        } else if (op == "span-min") {
            body = [&] { min_height_spanning_tree(g, t); };
        } else if (op == "label-l21") {
            body = [&] {
                LabellingStats st;
                label_l21(g, t, &st);
                if (st.repair_blocks > 0) repair_free = false;
            };
        } else if (op == "label-l01") {
            body = [&] {
                LabellingStats st;
                label_l01(g, t, &st);
                if (st.repair_blocks > 0) repair_free = false;
            };
        } else if (op == "label-t21") {
            body = [&] {
                LabellingStats st;
                label_t21(g, t, &st);
                if (st.repair_blocks > 0) repair_free = false;
            };
        } else {
            throw GraphError("bench: unknown operation " + op);
        }

        std::vector<double> times;
        times.reserve(reps);
        for (int r = 0; r < reps; ++r) {
            auto start = std::chrono::steady_clock::now();
            body();
            auto stop = std::chrono::steady_clock::now();
            times.push_back(
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
        }
        std::sort(times.begin(), times.end());
        BenchRecord rec;
        rec.op = op;
        rec.n = n;
        rec.reps = reps;
        rec.median_ns = times[times.size() / 2];
        rec.repair_free = repair_free;
        report.records.push_back(rec);
    }

    std::vector<std::pair<double, double>> pts;
    for (const auto& rec : report.records)
        pts.emplace_back(rec.n, std::max(rec.median_ns, 1.0));
    report.exponent = pts.size() >= 2 ? fit_exponent(pts) : 0.0;
    return report;
}

} // namespace cactus
