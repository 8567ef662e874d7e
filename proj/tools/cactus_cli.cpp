// Command-line front door for the cactus graph toolkit.
//
// Reads one graph (JSON) from --input or standard input, runs a subcommand,
// writes the result JSON to standard output. Exit codes: 0 success, 1 domain
// error (not a cactus, disconnected, oracle cap), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cactus/bench.hpp"
#include "cactus/decomposition.hpp"
#include "cactus/distances.hpp"
#include "cactus/generator.hpp"
#include "cactus/graph.hpp"
#include "cactus/labelling.hpp"
#include "cactus/oracle.hpp"
#include "cactus/selection.hpp"

namespace {

using nlohmann::json;

std::string read_all(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw cactus::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

cactus::Graph load_graph(const std::string& path) { return cactus::parse_graph(read_all(path)); }

cactus::BlockCutTree tree_for(const cactus::Graph& g) { return cactus::decompose(g); }

json vertex_set_json(const cactus::VertexSet& s) {
    return json{{"members", s.members}, {"objective", s.objective}};
}

json two_partition_json(const cactus::TwoPartition& s) {
    return json{{"s1", s.s1}, {"s2", s.s2}, {"objective", s.objective}};
}

json edges_json(const std::vector<std::pair<cactus::Vertex, cactus::Vertex>>& edges) {
    json arr = json::array();
    for (auto [u, v] : edges) arr.push_back({u, v});
    return arr;
}

json spanning_json(const cactus::SpanningTreeResult& r) {
    return json{{"deleted_edges", edges_json(r.deleted_edges)},
                {"root", r.root},
                {"height", r.height}};
}

json labelling_json(const cactus::VertexLabelling& lab) {
    return json{{"labels", lab.labels}, {"span", lab.span}};
}

json total_labelling_json(const cactus::Graph& g, const cactus::TotalLabelling& lab) {
    json edges = json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        edges.push_back({u, v, lab.edge_labels[e]});
    }
    return json{{"vertex_labels", lab.vertex_labels}, {"edge_labels", edges}, {"span", lab.span}};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"algorithms on cactus graphs"};
    app.require_subcommand(1);

    std::string input;
    app.add_option("--input", input, "input graph path (default: stdin)")->capture_default_str();

    // verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "test whether the graph is a cactus");

    // decompose ----------------------------------------------------------
    auto* decompose_cmd = app.add_subcommand("decompose", "blocks and the rooted block-cut tree");

    // distances ----------------------------------------------------------
    auto* sssp_cmd = app.add_subcommand("sssp", "single-source shortest paths");
    int source = 0;
    sssp_cmd->add_option("--source", source, "source vertex")->capture_default_str();
    auto* apsp_cmd = app.add_subcommand("apsp", "all-pairs shortest path matrix");
    auto* span_max = app.add_subcommand("span-max", "maximum height spanning tree");
    auto* span_min = app.add_subcommand("span-min", "minimum height spanning tree");

    // selection ----------------------------------------------------------
    auto* dominate = app.add_subcommand("dominate", "minimum dominating set");
    auto* cover2 = app.add_subcommand("cover2", "minimum 2-neighbourhood covering set");
    auto* mis = app.add_subcommand("mis", "maximum independent set");
    auto* m2is = app.add_subcommand("m2is", "maximum 2-independent set");
    auto* mw2is = app.add_subcommand("mw2is", "maximum weight 2-colorable subgraph");
    auto* fvs = app.add_subcommand("fvs", "minimum weight feedback vertex set");

    // labelling ----------------------------------------------------------
    auto* l21 = app.add_subcommand("label-l21", "L(2,1) labelling");
    auto* l01 = app.add_subcommand("label-l01", "L(0,1) labelling");
    auto* t21 = app.add_subcommand("label-t21", "(2,1)-total labelling");
    auto* validate = app.add_subcommand("validate", "check a labelling against the graph");
    std::string scheme, labelling_path;
    validate->add_option("--scheme", scheme, "l21 | l01 | t21")->required();
    validate->add_option("--labelling", labelling_path, "labelling JSON path")->required();

    // oracle -------------------------------------------------------------
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference solvers");
    std::string oracle_problem;
    int oracle_source = 0;
    oracle_cmd
        ->add_option("--problem", oracle_problem,
                     "sssp|longest|dominate|cover2|mis|m2is|mw2is|fvs|l21|l01|t21|tree-count")
        ->required();
    oracle_cmd->add_option("--source", oracle_source, "source vertex for sssp/longest");

    // generator ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "seeded random cactus");
    cactus::GenSpec spec;
    std::uint64_t seed = 0;
    std::string format = "json";
    gen->add_option("--blocks", spec.block_count, "number of blocks")->capture_default_str();
    gen->add_option("--cycle-frac", spec.cycle_fraction, "probability a block is a cycle")
        ->capture_default_str();
    gen->add_option("--min-len", spec.min_cycle_len, "minimum cycle length")->capture_default_str();
    gen->add_option("--max-len", spec.max_cycle_len, "maximum cycle length")->capture_default_str();
    gen->add_option("--min-edge-w", spec.min_edge_weight, "minimum edge weight")
        ->capture_default_str();
    gen->add_option("--max-edge-w", spec.max_edge_weight, "maximum edge weight")
        ->capture_default_str();
    gen->add_option("--min-vertex-w", spec.min_vertex_weight, "minimum vertex weight")
        ->capture_default_str();
    gen->add_option("--max-vertex-w", spec.max_vertex_weight, "maximum vertex weight")
        ->capture_default_str();
    gen->add_option("--seed", seed, "generator seed")->capture_default_str();
    gen->add_option("--format", format, "json | dot")->capture_default_str();

    // bench ----------------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "timing harness with a fitted growth exponent");
    std::string bench_op;
    std::vector<int> bench_sizes;
    int bench_reps = 5;
    std::uint64_t bench_seed = 1;
    bench->add_option("--op", bench_op, "operation to time")->required();
    bench->add_option("--sizes", bench_sizes, "instance sizes (ascending)")->required();
    bench->add_option("--reps", bench_reps, "repetitions per size (>= 5)")->capture_default_str();
    bench->add_option("--seed", bench_seed, "corpus seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            auto g = load_graph(input);
            auto report = cactus::is_cactus(g);
            json j{{"is_cactus", report.is_cactus}};
            if (report.witness) j["witness"] = {report.witness->first, report.witness->second};
            emit(j);
            return report.is_cactus ? 0 : 1;
        }
        if (*decompose_cmd) {
            auto g = load_graph(input);
            auto t = tree_for(g);
            json blocks = json::array();
            for (const auto& b : t.blocks) {
                blocks.push_back({{"id", b.id},
                                  {"kind", b.kind == cactus::BlockKind::edge ? "edge" : "cycle"},
                                  {"vertices", b.vertices},
                                  {"cutvertices", b.cutvertices_in_block},
                                  {"parent", t.parent[b.id]},
                                  {"entry_point", t.entry_point[b.id]},
                                  {"level", t.level[b.id]}});
            }
            emit(json{{"root", t.root}, {"blocks", blocks}});
            return 0;
        }
        if (*sssp_cmd) {
            auto g = load_graph(input);
            auto r = cactus::sssp(g, tree_for(g), source);
            emit(json{{"source", r.source}, {"dist", r.dist}, {"predecessor", r.predecessor}});
            return 0;
        }
        if (*apsp_cmd) {
            auto g = load_graph(input);
            auto m = cactus::apsp(g, tree_for(g));
            json rows = json::array();
            for (int i = 0; i < m.n; ++i) {
                json row = json::array();
                for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
                rows.push_back(std::move(row));
            }
            emit(json{{"matrix", rows}});
            return 0;
        }
        if (*span_max) {
            auto g = load_graph(input);
            emit(spanning_json(cactus::max_height_spanning_tree(g, tree_for(g))));
            return 0;
        }
        if (*span_min) {
            auto g = load_graph(input);
            emit(spanning_json(cactus::min_height_spanning_tree(g, tree_for(g))));
            return 0;
        }
        if (*dominate) {
            auto g = load_graph(input);
            emit(vertex_set_json(cactus::min_dominating_set(g, tree_for(g))));
            return 0;
        }
        if (*cover2) {
            auto g = load_graph(input);
            emit(vertex_set_json(cactus::min_2nc_set(g, tree_for(g))));
            return 0;
        }
        if (*mis) {
            auto g = load_graph(input);
            emit(vertex_set_json(cactus::max_independent_set(g, tree_for(g))));
            return 0;
        }
        if (*m2is) {
            auto g = load_graph(input);
            emit(two_partition_json(cactus::max_2_independent_set(g, tree_for(g))));
            return 0;
        }
        if (*mw2is) {
            auto g = load_graph(input);
            emit(two_partition_json(cactus::max_weight_2_colorable(g, tree_for(g))));
            return 0;
        }
        if (*fvs) {
            auto g = load_graph(input);
            emit(vertex_set_json(cactus::min_weight_fvs(g, tree_for(g))));
            return 0;
        }
        if (*l21) {
            auto g = load_graph(input);
            emit(labelling_json(cactus::label_l21(g, tree_for(g))));
            return 0;
        }
        if (*l01) {
            auto g = load_graph(input);
            emit(labelling_json(cactus::label_l01(g, tree_for(g))));
            return 0;
        }
        if (*t21) {
            auto g = load_graph(input);
            emit(total_labelling_json(g, cactus::label_t21(g, tree_for(g))));
            return 0;
        }
        if (*validate) {
            auto g = load_graph(input);
            json lj = json::parse(read_all(labelling_path));
            std::vector<std::string> violations;
            if (scheme == "l21" || scheme == "l01") {
                cactus::VertexLabelling lab;
                lab.labels = lj.at("labels").get<std::vector<int>>();
                lab.span = lj.value("span", 0);
                violations = scheme == "l21" ? cactus::validate_l21(g, lab)
                                             : cactus::validate_l01(g, lab);
            } else if (scheme == "t21") {
                cactus::TotalLabelling lab;
                lab.vertex_labels = lj.at("vertex_labels").get<std::vector<int>>();
                lab.edge_labels.assign(g.edge_count(), -1);
                for (const auto& item : lj.at("edge_labels")) {
                    int idx = g.find_edge(item[0].get<int>(), item[1].get<int>());
                    if (idx < 0) throw cactus::ParseError("labelling names an unknown edge");
                    lab.edge_labels[idx] = item[2].get<int>();
                }
                lab.span = lj.value("span", 0);
                violations = cactus::validate_t21(g, lab);
            } else {
                throw CLI::ValidationError("--scheme must be l21, l01 or t21");
            }
            emit(json{{"violations", violations}});
            return violations.empty() ? 0 : 1;
        }
        if (*oracle_cmd) {
            auto g = load_graph(input);
            if (oracle_problem == "sssp") {
                auto r = cactus::oracle::sssp(g, oracle_source);
                emit(json{{"source", r.source}, {"dist", r.dist}});
            } else if (oracle_problem == "longest") {
                auto r = cactus::oracle::longest(g, oracle_source);
                emit(json{{"source", r.source}, {"ldist", r.ldist}});
            } else if (oracle_problem == "dominate") {
                emit(vertex_set_json(cactus::oracle::min_subset(g, cactus::dominates)));
            } else if (oracle_problem == "cover2") {
                emit(vertex_set_json(cactus::oracle::min_subset(g, cactus::covers_all_edges_2nc)));
            } else if (oracle_problem == "mis") {
                emit(vertex_set_json(cactus::oracle::max_independent(g)));
            } else if (oracle_problem == "m2is") {
                emit(two_partition_json(cactus::oracle::max_2_independent(g)));
            } else if (oracle_problem == "mw2is") {
                auto removed = cactus::oracle::min_weight_subset(g, cactus::remainder_is_bipartite);
                emit(json{{"objective", g.total_vertex_weight() - removed.objective},
                          {"removed", removed.members}});
            } else if (oracle_problem == "fvs") {
                emit(vertex_set_json(cactus::oracle::min_weight_subset(g, cactus::remainder_is_forest)));
            } else if (oracle_problem == "l21") {
                emit(json{{"span", cactus::oracle::span(g, cactus::LabelScheme::l21)}});
            } else if (oracle_problem == "l01") {
                emit(json{{"span", cactus::oracle::span(g, cactus::LabelScheme::l01)}});
            } else if (oracle_problem == "t21") {
                emit(json{{"span", cactus::oracle::span(g, cactus::LabelScheme::t21)}});
            } else if (oracle_problem == "tree-count") {
                long long count = 0;
                cactus::oracle::enumerate_spanning_trees(
                    g, [&](const std::vector<int>&) { ++count; });
                emit(json{{"count", count},
                          {"product", cactus::oracle::spanning_tree_product(g)},
                          {"kirchhoff", cactus::oracle::count_spanning_trees_kirchhoff(g)}});
            } else {
                throw CLI::ValidationError("unknown oracle problem: " + oracle_problem);
            }
            return 0;
        }
        if (*gen) {
            spec.seed = seed;
            auto g = cactus::random_cactus(spec);
            if (format == "dot") std::cout << cactus::to_dot(g);
            else if (format == "json") std::cout << cactus::serialize_graph(g) << "\n";
            else throw CLI::ValidationError("--format must be json or dot");
            return 0;
        }
        if (*bench) {
            auto report = cactus::run_bench(bench_op, bench_sizes, bench_seed, bench_reps);
            json records = json::array();
            for (const auto& r : report.records)
                records.push_back({{"op", r.op},
                                   {"n", r.n},
                                   {"median_ns", r.median_ns},
                                   {"reps", r.reps},
                                   {"repair_free", r.repair_free}});
            emit(json{{"op", report.op}, {"records", records}, {"exponent", report.exponent}});
            return 0;
        }
    } catch (const cactus::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const cactus::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
