// Command-line front end: generate synthetic inputs, sweep partition
// sequences, build filtrations, compute persistence, derive the hierarchy
// and conflict measures, and compare diagrams. Every stage reads and writes
// plain files so stages can be tested and composed independently.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mcf/filtration.hpp"
#include "mcf/homology.hpp"
#include "mcf/io.hpp"
#include "mcf/measures.hpp"
#include "mcf/metrics.hpp"
#include "mcf/partition.hpp"
#include "mcf/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

std::uint64_t seed_from_env() {
    if (const char* env = std::getenv("MCF_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("MCF_SEED", "not an unsigned integer");
        }
    }
    return 42;
}

std::vector<double> linspace(const std::string& text) {
    // "start:stop:count"
    auto first = text.find(':');
    auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw CLI::ValidationError("--scales", "expected start:stop:count");
    double start = mcf::parse_double(text.substr(0, first), "--scales");
    double stop = mcf::parse_double(text.substr(first + 1, second - first - 1), "--scales");
    long count = std::stol(text.substr(second + 1));
    if (count < 1 || (count > 1 && !(start < stop)))
        throw CLI::ValidationError("--scales", "need count >= 1 and start < stop");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i)
        out.push_back(count == 1 ? start
                                 : start + (stop - start) * static_cast<double>(i) /
                                               static_cast<double>(count - 1));
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (item.empty()) throw CLI::ValidationError(flag, "empty entry");
        out.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (item.empty()) throw CLI::ValidationError(flag, "empty entry");
        out.push_back(mcf::parse_double(item, flag));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

mcf::FilteredComplex build_kind(const mcf::ScaledPartitionSequence& seq,
                                const std::string& kind, int max_dim) {
    if (kind == "mcf") return mcf::build_mcf(seq, max_dim);
    if (kind == "mcnf") return mcf::build_mcnf(seq, max_dim);
    if (kind == "cag-clique")
        return mcf::build_clique_filtration(mcf::build_cag(seq), max_dim);
    throw CLI::ValidationError("--kind", "unknown filtration kind '" + kind + "'");
}

std::vector<mcf::PersistenceDiagram> all_diagrams(const mcf::ReductionResult& r) {
    std::vector<mcf::PersistenceDiagram> out;
    for (int k = 0; k < r.max_dim; ++k) out.push_back(mcf::diagram(r, k));
    return out;
}

struct GenerateArgs {
    std::string model = "er";
    int n = 90;
    long edges = 1100;
    std::string blocks = "30,30,30";
    double p_in = 0.5;
    double p_out = 0.05;
    std::string levels = "27,9,3";
    std::string probs = "0.9,0.4,0.15,0.02";
    std::string out = "graph.txt";
    std::string planted_out;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

int run_generate(const GenerateArgs& args) {
    std::uint64_t seed = args.seed_set ? args.seed : seed_from_env();
    mcf::RandomGraph graph;
    std::optional<mcf::PlantedHierarchy> planted;
    if (args.model == "er") {
        graph = mcf::gen_er(args.n, args.edges, seed);
    } else if (args.model == "sbm") {
        auto sizes = parse_int_list(args.blocks, "--blocks");
        graph = mcf::gen_sbm(sizes, args.p_in, args.p_out, seed);
        std::vector<int> labels;
        for (std::size_t b = 0; b < sizes.size(); ++b)
            labels.insert(labels.end(), static_cast<std::size_t>(sizes[b]),
                          static_cast<int>(b));
        planted = mcf::PlantedHierarchy{{mcf::Partition(labels)}, {args.p_in, args.p_out}};
    } else if (args.model == "msbm") {
        planted = mcf::make_planted_hierarchy(args.n, parse_int_list(args.levels, "--levels"),
                                              parse_double_list(args.probs, "--probs"));
        graph = mcf::gen_msbm(*planted, seed);
    } else {
        throw CLI::ValidationError("--model", "unknown model '" + args.model + "'");
    }
    mcf::atomic_write(args.out, mcf::graph_to_edge_list(graph));
    std::cout << "wrote " << args.out << " (" << graph.n << " vertices, "
              << graph.edges.size() << " edges)\n";
    if (!args.planted_out.empty()) {
        if (!planted)
            throw CLI::ValidationError("--planted-out", "model has no planted partitions");
        std::vector<double> level_scales;
        for (std::size_t l = 0; l < planted->levels.size(); ++l)
            level_scales.push_back(static_cast<double>(l + 1));
        mcf::ScaledPartitionSequence levels(planted->levels, level_scales);
        mcf::write_sequence(args.planted_out, levels);
        std::cout << "wrote " << args.planted_out << "\n";
    }
    return kExitOk;
}

struct SweepArgs {
    std::string graph;
    std::string mode = "components";
    std::string planted;
    std::string scales = "1:60:60";
    double noise = 0.0;
    double transition_frac = 0.4;
    bool singleton_start = false;
    std::string out = "sequence.json";
    std::uint64_t seed = 0;
    bool seed_set = false;
};

int run_sweep(const SweepArgs& args) {
    std::uint64_t seed = args.seed_set ? args.seed : seed_from_env();
    mcf::SweepOptions options;
    options.noise_rate = args.noise;
    options.transition_frac = args.transition_frac;
    options.singleton_start = args.singleton_start;

    mcf::RandomGraph graph;
    mcf::PlantedHierarchy planted;
    if (args.mode == "components") {
        options.mode = mcf::SweepMode::Components;
        if (args.graph.empty())
            throw CLI::ValidationError("--graph", "components mode needs a graph file");
        graph = mcf::read_edge_list(args.graph);
    } else if (args.mode == "planted") {
        options.mode = mcf::SweepMode::PlantedInterpolation;
        if (args.planted.empty())
            throw CLI::ValidationError("--planted", "planted mode needs a levels file");
        auto levels = mcf::read_sequence(args.planted);
        planted.levels = levels.partitions();
        for (std::size_t l = 0; l + 1 < planted.levels.size(); ++l)
            if (!mcf::refines(planted.levels[l], planted.levels[l + 1]))
                throw std::runtime_error("planted levels do not nest (level " +
                                         std::to_string(l) + ")");
        options.planted = &planted;
        graph.n = planted.levels.empty() ? 0 : planted.levels.front().size();
    } else {
        throw CLI::ValidationError("--mode", "unknown sweep mode '" + args.mode + "'");
    }

    auto seq = mcf::sweep_partitions(graph, linspace(args.scales), options, seed);
    mcf::write_sequence(args.out, seq);
    std::cout << "wrote " << args.out << " (" << seq.size() << " scales, "
              << seq.n_points() << " points)\n";
    return kExitOk;
}

struct BuildArgs {
    std::string sequence;
    std::string kind = "mcf";
    int max_dim = 3;
    std::string out = "filtration.txt";
};

int run_build(const BuildArgs& args) {
    auto seq = mcf::read_sequence(args.sequence);
    auto fc = build_kind(seq, args.kind, args.max_dim);
    mcf::atomic_write(args.out, mcf::filtration_to_text(fc));
    std::cout << "wrote " << args.out << " (" << fc.size() << " cells)\n";
    return kExitOk;
}

struct PhArgs {
    std::string filtration;
    int modulus = 2;
    bool close_essentials = false;
    std::string out = "diagram.csv";
};

int run_ph(const PhArgs& args) {
    auto fc = mcf::read_filtration(args.filtration);
    auto r = mcf::reduce(fc, args.modulus);
    auto diagrams = all_diagrams(r);
    if (args.close_essentials && !fc.scale_grid().empty()) {
        double top = fc.scale_grid().back();
        for (auto& d : diagrams)
            for (auto& pt : d.points)
                if (pt.essential()) pt.death = top;
    }
    mcf::atomic_write(args.out, mcf::diagrams_to_csv(diagrams));
    std::cout << "wrote " << args.out << "\n";
    return kExitOk;
}

struct MeasuresArgs {
    std::string sequence;
    int max_dim = 3;
    int modulus = 2;
    int plateau_length = 3;
    long betti_ceiling = 0;
    std::string out_measures = "measures.csv";
    std::string out_selected = "selected.json";
};

int run_measures(const MeasuresArgs& args) {
    auto seq = mcf::read_sequence(args.sequence);
    auto r = mcf::reduce(mcf::build_mcf(seq, args.max_dim), args.modulus);
    auto h = mcf::persistent_hierarchy(seq, r);
    auto conflict = mcf::total_conflict(r);
    std::vector<mcf::StepFunction> betti;
    for (int k = 0; k < r.max_dim; ++k) betti.push_back(mcf::betti_curve(r, k));
    mcf::atomic_write(args.out_measures, mcf::measures_to_csv(h, conflict, betti));

    mcf::ScaleSelectionParams params{args.plateau_length, args.betti_ceiling};
    std::vector<mcf::StepFunction> conflict_betti(betti.begin() + 1, betti.end());
    auto selected = mcf::select_scales(h, conflict, conflict_betti, params);
    mcf::atomic_write(args.out_selected,
                      mcf::selected_scales_to_json(selected, params,
                                                   mcf::average_hierarchy(h)));

    std::cout << "average_hierarchy " << mcf::format_double(mcf::average_hierarchy(h))
              << "\n";
    std::cout << "selected_scales";
    for (const auto& s : selected) std::cout << " " << mcf::format_double(s.scale);
    std::cout << "\n";
    return kExitOk;
}

struct DistanceArgs {
    std::string metric = "wasserstein";
    double q = 2.0;
    int dim = 0;
    std::string file_a;
    std::string file_b;
};

int run_distance(const DistanceArgs& args) {
    double value = 0;
    if (args.metric == "filtration") {
        auto fa = mcf::read_filtration(args.file_a);
        auto fb = mcf::read_filtration(args.file_b);
        value = mcf::filtration_distance(fa, fb, args.q);
    } else {
        auto da = mcf::read_diagrams(args.file_a);
        auto db = mcf::read_diagrams(args.file_b);
        auto pick = [](const std::vector<mcf::PersistenceDiagram>& list, int dim) {
            for (const auto& d : list)
                if (d.dim == dim) return d;
            return mcf::PersistenceDiagram{dim, {}};
        };
        auto a = pick(da, args.dim);
        auto b = pick(db, args.dim);
        if (args.metric == "wasserstein")
            value = mcf::wasserstein(a, b, args.q);
        else if (args.metric == "bottleneck")
            value = mcf::bottleneck(a, b);
        else
            throw CLI::ValidationError("--metric", "unknown metric '" + args.metric + "'");
    }
    std::cout << mcf::format_double(value) << "\n";
    return kExitOk;
}

int run_validate(const std::string& path) {
    auto fc = mcf::read_filtration(path);
    auto report = mcf::validate(fc);
    if (report.ok) {
        std::cout << "ok (" << fc.size() << " cells)\n";
        return kExitOk;
    }
    std::cerr << "invalid filtration:\n";
    for (const std::string& v : report.violations) std::cerr << "  " << v << "\n";
    return kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiscale clustering filtrations: persistence, hierarchy and "
                 "conflict analysis of partition sequences"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* cmd_generate = app.add_subcommand("generate", "generate a synthetic graph");
    cmd_generate->add_option("--model", gen.model, "er | sbm | msbm");
    cmd_generate->add_option("--n", gen.n, "vertex count (er, msbm)");
    cmd_generate->add_option("--edges", gen.edges, "edge count (er)");
    cmd_generate->add_option("--blocks", gen.blocks, "block sizes (sbm)");
    cmd_generate->add_option("--p-in", gen.p_in, "within-block probability (sbm)");
    cmd_generate->add_option("--p-out", gen.p_out, "across-block probability (sbm)");
    cmd_generate->add_option("--levels", gen.levels, "cluster counts, fine to coarse (msbm)");
    cmd_generate->add_option("--probs", gen.probs,
                             "connection probability per level plus one (msbm)");
    cmd_generate->add_option("--out", gen.out, "edge-list output path");
    cmd_generate->add_option("--planted-out", gen.planted_out,
                             "write planted partitions as a sequence file (sbm, msbm)");
    auto* gen_seed = cmd_generate->add_option("--seed", gen.seed, "RNG seed (overrides MCF_SEED)");

    SweepArgs sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "produce a partition sequence");
    cmd_sweep->add_option("--graph", sweep.graph, "edge-list input (components mode)");
    cmd_sweep->add_option("--mode", sweep.mode, "components | planted");
    cmd_sweep->add_option("--planted", sweep.planted, "planted levels file (planted mode)");
    cmd_sweep->add_option("--scales", sweep.scales, "scale grid start:stop:count");
    cmd_sweep->add_option("--noise", sweep.noise, "per-point reassignment rate");
    cmd_sweep->add_option("--transition-frac", sweep.transition_frac,
                          "fraction of each block spent in noisy transition (planted mode)");
    cmd_sweep->add_flag("--singleton-start", sweep.singleton_start,
                        "force the first scale to the partition of singletons");
    cmd_sweep->add_option("--out", sweep.out, "sequence output path (.json or .csv)");
    auto* sweep_seed = cmd_sweep->add_option("--seed", sweep.seed, "RNG seed (overrides MCF_SEED)");

    BuildArgs build;
    auto* cmd_build = app.add_subcommand("build", "build a filtration from a sequence");
    cmd_build->add_option("--sequence", build.sequence, "sequence file")->required();
    cmd_build->add_option("--kind", build.kind, "mcf | mcnf | cag-clique");
    cmd_build->add_option("--max-dim", build.max_dim, "simplex dimension cap")
        ->check(CLI::PositiveNumber);
    cmd_build->add_option("--out", build.out, "filtration output path");

    PhArgs ph;
    auto* cmd_ph = app.add_subcommand("ph", "compute persistence diagrams");
    cmd_ph->add_option("--filtration", ph.filtration, "filtration file")->required();
    cmd_ph->add_option("--modulus", ph.modulus, "prime field modulus");
    cmd_ph->add_flag("--essential-death-at-end", ph.close_essentials,
                     "report essential classes as dying at the last scale");
    cmd_ph->add_option("--out", ph.out, "diagram CSV output path");

    MeasuresArgs measures;
    auto* cmd_measures =
        app.add_subcommand("measures", "hierarchy and conflict measures of a sequence");
    cmd_measures->add_option("--sequence", measures.sequence, "sequence file")->required();
    cmd_measures->add_option("--max-dim", measures.max_dim, "simplex dimension cap");
    cmd_measures->add_option("--modulus", measures.modulus, "prime field modulus");
    cmd_measures->add_option("--plateau-length", measures.plateau_length,
                             "minimal constant run for scale selection");
    cmd_measures->add_option("--betti-ceiling", measures.betti_ceiling,
                             "maximal unresolved-class count for scale selection");
    cmd_measures->add_option("--out-measures", measures.out_measures, "measures CSV path");
    cmd_measures->add_option("--out-selected", measures.out_selected,
                             "selected-scales JSON path");

    DistanceArgs distance;
    auto* cmd_distance = app.add_subcommand("distance", "distance between two files");
    cmd_distance->add_option("--metric", distance.metric,
                             "wasserstein | bottleneck | filtration");
    cmd_distance->add_option("--q", distance.q, "exponent (use inf for the sup norm)")
        ->transform([](std::string s) {
            return s == "inf" ? std::string("1e999") : s; // overflows to infinity
        });
    cmd_distance->add_option("--dim", distance.dim, "diagram dimension to compare");
    cmd_distance->add_option("a", distance.file_a, "first file")->required();
    cmd_distance->add_option("b", distance.file_b, "second file")->required();

    std::string validate_path;
    auto* cmd_validate = app.add_subcommand("validate", "check a filtration file");
    cmd_validate->add_option("--filtration", validate_path, "filtration file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        gen.seed_set = gen_seed->count() > 0;
        sweep.seed_set = sweep_seed->count() > 0;
        if (cmd_generate->parsed()) return run_generate(gen);
        if (cmd_sweep->parsed()) return run_sweep(sweep);
        if (cmd_build->parsed()) return run_build(build);
        if (cmd_ph->parsed()) return run_ph(ph);
        if (cmd_measures->parsed()) return run_measures(measures);
        if (cmd_distance->parsed()) return run_distance(distance);
        if (cmd_validate->parsed()) return run_validate(validate_path);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
