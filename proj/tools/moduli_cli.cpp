#include "moduli/graph_canonical.hpp"
#include "moduli/graph_enumerate.hpp"
#include "moduli/graph_io.hpp"
#include "moduli/graph_reduction.hpp"
#include "moduli/numerology.hpp"
#include "moduli/stability.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace moduli;

std::vector<Rat> parse_coeff_list(const std::string& text) {
    std::vector<Rat> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        coeffs.push_back(parse_rational(item));
    return coeffs;
}

ProjectivePoint parse_point(const std::string& text) {
    std::vector<Rat> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(parse_rational(item));
    if (parts.size() != 3)
        throw std::domain_error("point must be written \"x:y:z\"");
    ProjectivePoint p{parts[0], parts[1], parts[2]};
    if (!p.is_valid())
        throw std::domain_error("(0:0:0) is not a projective point");
    return p;
}

void emit(const std::string& key, const std::string& value) {
    std::cout << key << " = " << value << "\n";
}

void emit(const std::string& key, const char* value) { emit(key, std::string(value)); }

void emit(const std::string& key, long long value) { emit(key, std::to_string(value)); }

void emit(const std::string& key, bool value) { emit(key, std::string(value ? "true" : "false")); }

struct StabilityArgs {
    int degree = 0;
    std::string coeffs;
    long lambda_r = 0;
    bool has_lambda = false;
};

void run_stability(const StabilityArgs& args) {
    const BinaryForm form(args.degree, parse_coeff_list(args.coeffs));
    const auto mult = max_multiplicity(form);
    const auto status = binary_form_stability(form);
    emit("degree", static_cast<long long>(args.degree));
    emit("status", to_string(status));
    emit("max_multiplicity", static_cast<long long>(mult.max));
    if (args.has_lambda) {
        const auto report = lambda_status(form, OnePS(args.lambda_r));
        emit("lambda_r", static_cast<long long>(args.lambda_r));
        std::string weights;
        for (long long w : report.weights_present) {
            if (!weights.empty())
                weights += ",";
            weights += std::to_string(w);
        }
        emit("lambda_weights_present", weights);
        emit("lambda_min_weight", report.min_weight);
        emit("lambda_status", to_string(report.status));
    }
}

void run_point(const std::string& form_path, const std::string& point_text) {
    const TernaryForm form = read_ternary_form_file(form_path);
    const ProjectivePoint p = parse_point(point_text);
    emit("point", point_text);
    emit("classification", to_string(classify_point(form, p)));
}

void run_graph_check(const std::string& path) {
    const StableGraph g = read_graph_file(path);
    emit("total_genus", static_cast<long long>(g.total_genus()));
    emit("stability_class", to_string(stability_class(g)));
    emit("automorphism_count", automorphism_count(g).str());
    emit("canonical_key", canonical_form(g, false).to_string());
    emit("canonical_key_blind", canonical_form(g, true).to_string());
}

void run_enumerate(int genus, std::optional<int> edges, bool count_only) {
    const auto classes = enumerate_stable_graphs(genus, edges);
    if (count_only) {
        std::cout << classes.size() << "\n";
        return;
    }
    for (const auto& g : classes)
        std::cout << graph_to_json(g).dump() << "\n";
}

struct ReduceArgs {
    std::string in_path;
    std::string out_path;
    int base_change_degree = 0;
    bool has_base_change = false;
    bool do_resolve = false;
    bool do_stabilize = false;
};

void run_reduce(const ReduceArgs& args) {
    StableGraph g = read_graph_file(args.in_path);
    if (args.has_base_change)
        g = base_change(g, args.base_change_degree);
    if (args.do_resolve)
        g = resolve(g);
    if (args.do_stabilize)
        g = stabilize(g);
    if (!args.out_path.empty())
        write_graph_file(g, args.out_path);
    else
        std::cout << graph_to_json(g).dump() << "\n";
}

struct NumerologyArgs {
    long long genus = 0;
    long long n = 0;
    bool has_n = false;
    long long gieseker_degree = 0;
    bool has_gieseker = false;
    long long cover_degree = 0;
    long long branch_points = 0;
    bool has_cover = false;
};

void run_numerology(const NumerologyArgs& args) {
    const ModuliFacts facts = moduli_facts(args.genus);
    emit("g", facts.g);
    emit("dimension", facts.dimension);
    emit("boundary_divisor_count", facts.boundary_divisor_count);
    emit("diaz_bound", facts.diaz_bound);
    emit("general_type_known", facts.general_type_known);
    emit("unirationality_known", facts.unirationality_known);
    emit("min_cover_degree", facts.min_cover_degree);
    if (args.has_n) {
        const auto e = canonical_hilbert(args.genus, args.n);
        emit("n", args.n);
        emit("hilbert_poly", e.poly.to_string());
        emit("rank", e.rank);
        emit("ambient_dim", e.ambient_dim);
    }
    if (args.has_gieseker) {
        const auto p = gieseker_parameters(args.genus, args.gieseker_degree);
        emit("gieseker_degree", args.gieseker_degree);
        emit("gieseker_ambient_dim", p.ambient_dim);
        emit("gieseker_poly", p.poly.to_string());
    }
    if (args.has_cover) {
        emit("cover_degree", args.cover_degree);
        emit("branch_points", args.branch_points);
        emit("hurwitz_genus", hurwitz_genus(args.cover_degree, args.branch_points));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations around stable curves: Hilbert-Mumford stability of "
                 "binary forms, plane-curve point classification, dual graphs with a "
                 "combinatorial reduction calculus, and moduli numerology."};
    app.require_subcommand(1);

    StabilityArgs stab_args;
    auto* stab = app.add_subcommand("stability", "Classify a binary form under the SL(2) action");
    stab->add_option("--degree", stab_args.degree, "Degree d of the form")->required();
    stab->add_option("--coeffs", stab_args.coeffs,
                     "Comma list a_0,...,a_d of rationals; a_i multiplies X0^i X1^(d-i)")
        ->required();
    auto* lambda_opt = stab->add_option("--lambda", stab_args.lambda_r,
                                        "Also report weights for the diagonal 1-PS of weight r");

    std::string form_path, point_text;
    auto* point = app.add_subcommand("point", "Classify a rational point of a plane curve");
    point->add_option("--form", form_path, "Ternary form file (JSON)")->required();
    point->add_option("--point", point_text, "Projective point \"x:y:z\"")->required();

    std::string check_path;
    auto* check = app.add_subcommand("graph-check", "Report invariants of a dual graph");
    check->add_option("--in", check_path, "Graph file (JSON)")->required();

    int enum_genus = 0;
    int enum_edges = 0;
    bool count_only = false;
    auto* enumerate = app.add_subcommand("graph-enumerate", "List stable graph classes of a genus");
    enumerate->add_option("--genus", enum_genus, "Total genus (2..5 unrestricted)")->required();
    auto* edges_opt = enumerate->add_option("--edges", enum_edges, "Restrict to exactly this many edges");
    enumerate->add_flag("--count-only", count_only, "Print only the number of classes");

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand(
        "reduce", "Apply base change, resolution and stabilization to a dual graph");
    reduce->add_option("--in", reduce_args.in_path, "Graph file (JSON)")->required();
    auto* bc_opt =
        reduce->add_option("--base-change", reduce_args.base_change_degree, "Base change degree");
    reduce->add_flag("--resolve", reduce_args.do_resolve, "Resolve thick nodes into chains");
    reduce->add_flag("--stabilize", reduce_args.do_stabilize, "Contract rational valence-2 vertices");
    reduce->add_option("--out", reduce_args.out_path, "Write the result here instead of stdout");

    NumerologyArgs num_args;
    auto* numerology = app.add_subcommand("numerology", "Moduli-space numerology for a genus");
    numerology->add_option("--genus", num_args.genus, "Genus g >= 2")->required();
    auto* n_opt = numerology->add_option("--n", num_args.n, "n-canonical embedding data (n >= 3)");
    auto* gd_opt = numerology->add_option("--gieseker-degree", num_args.gieseker_degree,
                                          "Gieseker parameters for this degree");
    auto* cd_opt = numerology->add_option("--cover-degree", num_args.cover_degree,
                                          "Branched-cover degree k");
    auto* bp_opt = numerology->add_option("--branch-points", num_args.branch_points,
                                          "Number of simple branch points (even)");
    cd_opt->needs(bp_opt);
    bp_opt->needs(cd_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(stab)) {
            stab_args.has_lambda = lambda_opt->count() > 0;
            run_stability(stab_args);
        } else if (app.got_subcommand(point)) {
            run_point(form_path, point_text);
        } else if (app.got_subcommand(check)) {
            run_graph_check(check_path);
        } else if (app.got_subcommand(enumerate)) {
            run_enumerate(enum_genus,
                          edges_opt->count() > 0 ? std::optional<int>(enum_edges) : std::nullopt,
                          count_only);
        } else if (app.got_subcommand(reduce)) {
            reduce_args.has_base_change = bc_opt->count() > 0;
            run_reduce(reduce_args);
        } else if (app.got_subcommand(numerology)) {
            num_args.has_n = n_opt->count() > 0;
            num_args.has_gieseker = gd_opt->count() > 0;
            num_args.has_cover = cd_opt->count() > 0;
            run_numerology(num_args);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
