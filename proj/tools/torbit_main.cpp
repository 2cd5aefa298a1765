// torbit: classify torus-representation orbit spaces and the combinatorics
// around them (decomposition certificates, face posets, independence-complex
// homology, Leontief substitution systems).
//
// Exit codes for `analyze`: 0 closed manifold, 1 manifold with boundary,
// 2 not a manifold, 70 internal route disagreement, 3 input or module error.
// Other verbs: 0 on success, 3 on error (decompose keeps 2 for obstructed
// systems, selfcheck returns 4 on any violation).

#include "torbit/classifier.hpp"
#include "torbit/complex.hpp"
#include "torbit/face_poset.hpp"
#include "torbit/leontief_lp.hpp"
#include "torbit/matroid.hpp"
#include "torbit/selfcheck.hpp"
#include "torbit/weights.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

struct CommonFlags {
    std::string input_path;
    bool as_json = false;
    bool verbose = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool needs_input) {
    if (needs_input)
        cmd->add_option("--input", flags.input_path, "input file (default: stdin)");
    cmd->add_flag("--json", flags.as_json, "machine-readable JSON output");
    cmd->add_flag("--verbose", flags.verbose, "extra detail in text output");
}

std::string read_input(const CommonFlags& flags) {
    if (flags.input_path.empty() || flags.input_path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(flags.input_path);
    if (!file) throw std::invalid_argument("cannot open input file '" + flags.input_path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct ModuleError {
    std::string module;
    std::string message;
    std::string input_echo;
};

int fail(const ModuleError& error, bool as_json) {
    if (as_json) {
        json doc{{"error",
                  {{"module", error.module}, {"message", error.message}, {"input", error.input_echo}}}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cerr << "error in " << error.module << ": " << error.message << "\n";
        if (!error.input_echo.empty()) std::cerr << "input was: " << error.input_echo << "\n";
    }
    return 3;
}

std::string shorten(const std::string& text, std::size_t limit = 400) {
    if (text.size() <= limit) return text;
    return text.substr(0, limit) + "...";
}

// Builds the independence complex the same way the pseudomanifold route does.
torbit::SimplicialComplex independence_complex(const torbit::WeightSystem& ws) {
    const torbit::WeightSystem sys = torbit::effective_reduction(ws).system;
    if (sys.count() == 0) return torbit::SimplicialComplex({}, {});
    const torbit::LinearMatroid m(sys);
    std::vector<int> vertices(m.size());
    std::iota(vertices.begin(), vertices.end(), 0);
    return torbit::SimplicialComplex(vertices, m.bases());
}

int run_analyze(const CommonFlags& flags) {
    std::string text = read_input(flags);
    torbit::WeightSystem ws;
    try {
        ws = torbit::parse_weights_text(text);
    } catch (const std::exception& e) {
        return fail({"weights", e.what(), shorten(text)}, flags.as_json);
    }

    torbit::OrbitVerdict structural, pseudo;
    try {
        structural = torbit::classify_structural(ws);
        pseudo = torbit::classify_pseudomanifold(ws);
    } catch (const std::exception& e) {
        return fail({"classifier", e.what(), shorten(text)}, flags.as_json);
    }

    if (structural.kind != pseudo.kind || structural.model_dim != pseudo.model_dim) {
        std::cerr << "route disagreement; this is a bug in this tool, please report it\n"
                  << "structural:     " << torbit::serialize(structural).dump(2) << "\n"
                  << "pseudomanifold: " << torbit::serialize(pseudo).dump(2) << "\n"
                  << "input: " << shorten(text) << "\n";
        return 70;
    }

    if (flags.as_json) {
        emit(torbit::serialize(structural));
    } else {
        switch (structural.kind) {
            case torbit::OrbitKind::ClosedManifold:
                std::cout << "closed manifold " << torbit::describe_model(structural) << "\n";
                break;
            case torbit::OrbitKind::ManifoldWithBoundary:
                std::cout << "manifold with boundary: " << torbit::describe_model(structural)
                          << "\n";
                break;
            case torbit::OrbitKind::NotManifold: {
                std::cout << torbit::describe_model(structural) << "\n";
                const auto& w = *structural.witness;
                std::cout << "witness: ridge {";
                for (std::size_t i = 0; i < w.ridge.size(); ++i)
                    std::cout << (i ? "," : "") << w.ridge[i];
                std::cout << "} lies in " << w.facet_count << " facets; its flat is {";
                for (std::size_t i = 0; i < w.flat.size(); ++i)
                    std::cout << (i ? "," : "") << w.flat[i];
                std::cout << "}\n";
                break;
            }
        }
        if (flags.verbose && structural.leontief) {
            std::cout << "certificate: " << torbit::serialize(*structural.leontief).dump() << "\n";
        }
    }
    switch (structural.kind) {
        case torbit::OrbitKind::ClosedManifold: return 0;
        case torbit::OrbitKind::ManifoldWithBoundary: return 1;
        case torbit::OrbitKind::NotManifold: return 2;
    }
    return 3;
}

int run_decompose(const CommonFlags& flags) {
    std::string text = read_input(flags);
    try {
        const torbit::WeightSystem ws = torbit::parse_weights_text(text);
        const torbit::OrbitVerdict verdict = torbit::classify_structural(ws);
        if (verdict.kind == torbit::OrbitKind::NotManifold) {
            if (flags.as_json)
                emit(torbit::serialize(verdict));
            else
                std::cout << "no decomposition: " << torbit::describe_model(verdict) << "\n";
            return 2;
        }
        if (flags.as_json)
            emit(torbit::serialize(*verdict.leontief));
        else {
            const auto lt = verdict.leontief->canonicalized();
            std::cout << "d=" << lt.d << " blocks=[";
            for (std::size_t i = 0; i < lt.blocks.size(); ++i)
                std::cout << (i ? "," : "") << lt.blocks[i];
            std::cout << "] l=" << lt.l << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        return fail({"classifier", e.what(), shorten(text)}, flags.as_json);
    }
}

int run_faces(const CommonFlags& flags) {
    std::string text = read_input(flags);
    try {
        const torbit::WeightSystem ws = torbit::parse_weights_text(text);
        const torbit::GradedPoset poset = torbit::face_poset(ws);
        std::optional<std::vector<torbit::FlatEncoding>> encodings;
        const torbit::OrbitVerdict verdict = torbit::classify_structural(ws);
        if (verdict.leontief) {
            auto product = torbit::product_structure_check(ws, *verdict.leontief);
            if (product.ok) encodings = std::move(product.encodings);
        }
        if (flags.as_json) {
            emit(torbit::serialize(poset, encodings));
        } else {
            std::cout << poset.size() << " faces\n";
            if (flags.verbose)
                for (int i = 0; i < poset.size(); ++i) {
                    std::cout << "rank " << poset.ranks[i] << ": {";
                    for (std::size_t j = 0; j < poset.elements[i].size(); ++j)
                        std::cout << (j ? "," : "") << poset.elements[i][j];
                    std::cout << "}\n";
                }
        }
        return 0;
    } catch (const std::exception& e) {
        return fail({"face_poset", e.what(), shorten(text)}, flags.as_json);
    }
}

int run_homology(const CommonFlags& flags) {
    std::string text = read_input(flags);
    try {
        const torbit::WeightSystem ws = torbit::parse_weights_text(text);
        const auto groups = torbit::reduced_homology(independence_complex(ws));
        if (flags.as_json) {
            emit(torbit::serialize(groups));
        } else {
            for (const auto& g : groups) {
                std::cout << "H~_" << g.degree << " = ";
                if (g.free_rank == 0 && g.torsion.empty())
                    std::cout << "0";
                else {
                    if (g.free_rank == 1)
                        std::cout << "Z";
                    else if (g.free_rank > 1)
                        std::cout << "Z^" << g.free_rank;
                    for (std::size_t i = 0; i < g.torsion.size(); ++i)
                        std::cout << ((g.free_rank > 0 || i > 0) ? " + " : "") << "Z/"
                                  << g.torsion[i];
                }
                std::cout << "\n";
            }
        }
        return 0;
    } catch (const std::exception& e) {
        return fail({"complex", e.what(), shorten(text)}, flags.as_json);
    }
}

json lp_report_json(const torbit::LeontiefSystem& sys) {
    const torbit::LeontiefCheck check = torbit::check_leontief(sys);
    json out = torbit::serialize(torbit::enumerate_vertices(sys));
    out["leontief_class"] = torbit::to_string(check.cls);
    out["reason"] = check.reason.empty() ? json() : json(check.reason);
    try {
        const torbit::SimplicialComplex nerve = torbit::nerve_complex(sys);
        out["nerve"] = json{{"vertices", nerve.vertices()}, {"facets", nerve.facets()}};
        out["nerve_error"] = nullptr;
    } catch (const std::exception& e) {
        out["nerve"] = nullptr;
        out["nerve_error"] = e.what();
    }
    return out;
}

int run_lp(const CommonFlags& flags) {
    std::string text = read_input(flags);
    try {
        const torbit::LeontiefSystem sys =
            torbit::parse_system(json::parse(text, nullptr, true));
        const json report = lp_report_json(sys);
        if (flags.as_json) {
            emit(report);
        } else {
            std::cout << "class: " << report["leontief_class"].get<std::string>();
            if (!report["reason"].is_null())
                std::cout << " (" << report["reason"].get<std::string>() << ")";
            std::cout << "\nfeasible: " << (report["feasible"].get<bool>() ? "yes" : "no")
                      << ", bounded: " << (report["bounded"].get<bool>() ? "yes" : "no")
                      << ", dim: " << report["dim"].get<int>()
                      << ", simple: " << (report["simple"].get<bool>() ? "yes" : "no")
                      << ", vertices: " << report["vertices"].size() << "\n";
            if (!report["nerve"].is_null())
                std::cout << "nerve facets: " << report["nerve"]["facets"].dump() << "\n";
            else
                std::cout << "nerve: unavailable (" << report["nerve_error"].get<std::string>()
                          << ")\n";
        }
        return 0;
    } catch (const std::exception& e) {
        return fail({"leontief_lp", e.what(), shorten(text)}, flags.as_json);
    }
}

int run_bridge(const CommonFlags& flags) {
    std::string text = read_input(flags);
    try {
        const torbit::LeontiefSystem sys =
            torbit::parse_system(json::parse(text, nullptr, true));
        const torbit::LeontiefCheck check = torbit::check_leontief(sys);
        const torbit::WeightSystem ws = torbit::restrict_standard_weights(sys);
        const torbit::OrbitVerdict verdict = torbit::classify_structural(ws);

        json consistent;
        if (check.cls == torbit::LeontiefClass::Totally)
            consistent = verdict.kind == torbit::OrbitKind::ClosedManifold;
        else if (check.cls == torbit::LeontiefClass::NonTotally)
            consistent = verdict.kind == torbit::OrbitKind::ManifoldWithBoundary;

        const json out{{"lp", lp_report_json(sys)},
                       {"restricted_weights", torbit::serialize(ws)},
                       {"orbit", torbit::serialize(verdict)},
                       {"consistent", consistent}};
        if (flags.as_json) {
            emit(out);
        } else {
            std::cout << "system: " << torbit::to_string(check.cls)
                      << ", orbit space: " << torbit::to_string(verdict.kind) << " ("
                      << torbit::describe_model(verdict) << ")\n";
            if (consistent.is_boolean())
                std::cout << "bounded/manifold correspondence: "
                          << (consistent.get<bool>() ? "holds" : "fails here") << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        return fail({"leontief_lp", e.what(), shorten(text)}, flags.as_json);
    }
}

json check_result_json(const torbit::selfcheck::CheckResult& r) {
    return json{{"systems_checked", r.systems_checked},
                {"distinct_classes", r.distinct_classes},
                {"disagreements", r.disagreements},
                {"homology_failures", r.homology_failures},
                {"subsample_checked", r.subsample_checked},
                {"subsample_mismatches", r.subsample_mismatches},
                {"completed", r.completed},
                {"coverage", r.coverage},
                {"failures", r.failures}};
}

int run_selfcheck(const CommonFlags& flags, double budget, bool inject_fault) {
    torbit::selfcheck::SweepOptions sweep_options;
    sweep_options.budget_seconds = budget * 0.8;
    sweep_options.check_homology = true;
    sweep_options.inject_fault = inject_fault;
    const auto sweep = torbit::selfcheck::route_equivalence_sweep(sweep_options);

    torbit::selfcheck::RandomOptions random_options;
    random_options.count = 2000;
    const auto random = torbit::selfcheck::random_systems_check(random_options);

    const bool ok = sweep.clean() && random.clean();
    if (flags.as_json) {
        emit(json{{"sweep", check_result_json(sweep)},
                  {"random", check_result_json(random)},
                  {"ok", ok}});
    } else {
        std::cout << "sweep: " << sweep.systems_checked << " systems, "
                  << sweep.distinct_classes << " independence classes, "
                  << sweep.disagreements << " route disagreements, " << sweep.homology_failures
                  << " homology violations, subsample " << sweep.subsample_checked << "/"
                  << sweep.subsample_mismatches << " mismatches\n";
        if (!sweep.completed)
            std::cout << "sweep truncated by budget: coverage " << sweep.coverage << "\n";
        std::cout << "random: " << random.systems_checked << " systems, "
                  << random.disagreements << " route disagreements\n";
        for (const auto& f : sweep.failures) std::cout << "FAIL " << f << "\n";
        for (const auto& f : random.failures) std::cout << "FAIL " << f << "\n";
        std::cout << (ok ? "selfcheck passed" : "selfcheck FAILED") << "\n";
    }
    return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit-space classification of compact-torus representations"};
    app.require_subcommand(1);

    CommonFlags analyze_flags, decompose_flags, faces_flags, homology_flags, lp_flags,
        bridge_flags, selfcheck_flags;
    double budget = 60.0;
    bool inject_fault = false;

    add_common(app.add_subcommand("analyze",
                                  "classify the orbit space of a weight system"),
               analyze_flags, true);
    add_common(app.add_subcommand("decompose", "decomposition certificate of a weight system"),
               decompose_flags, true);
    add_common(app.add_subcommand("faces", "face poset (lattice of flats) of a weight system"),
               faces_flags, true);
    add_common(app.add_subcommand("homology",
                                  "reduced homology of the independence complex"),
               homology_flags, true);
    add_common(app.add_subcommand("lp", "analyze a substitution system Ax=b, x>=0"), lp_flags,
               true);
    add_common(app.add_subcommand("bridge",
                                  "substitution system vs orbit space of its restricted weights"),
               bridge_flags, true);
    CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the built-in verification sweep");
    add_common(selfcheck, selfcheck_flags, false);
    selfcheck->add_option("--budget", budget, "time budget in seconds")->check(CLI::PositiveNumber);
    selfcheck->add_flag("--inject-fault", inject_fault, "corrupt one verdict (for testing)")
        ->group("");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("analyze")) return run_analyze(analyze_flags);
        if (app.got_subcommand("decompose")) return run_decompose(decompose_flags);
        if (app.got_subcommand("faces")) return run_faces(faces_flags);
        if (app.got_subcommand("homology")) return run_homology(homology_flags);
        if (app.got_subcommand("lp")) return run_lp(lp_flags);
        if (app.got_subcommand("bridge")) return run_bridge(bridge_flags);
        if (app.got_subcommand("selfcheck"))
            return run_selfcheck(selfcheck_flags, budget, inject_fault);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
