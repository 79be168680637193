#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "inj/bounds.hpp"
#include "inj/corpus.hpp"
#include "inj/generate.hpp"
#include "inj/io.hpp"
#include "inj/mad.hpp"
#include "inj/solver.hpp"

using json = nlohmann::ordered_json;

namespace {

int exit_code_for(inj::Errc code) {
    switch (code) {
    case inj::Errc::ParseError:
    case inj::Errc::FormatViolation:
    case inj::Errc::LoopEdge:
    case inj::Errc::DuplicateEdge:
    case inj::Errc::VertexOutOfRange:
    case inj::Errc::UnknownName:
        return 3;
    case inj::Errc::Internal:
        return 5;
    default:
        return 4; // precondition violations of every stripe
    }
}

inj::GraphFormat parse_format(const std::string& name, const std::string& path) {
    if (name == "graph6") return inj::GraphFormat::Graph6;
    if (name == "edgelist") return inj::GraphFormat::EdgeList;
    if (name == "dimacs") return inj::GraphFormat::Dimacs;
    if (!name.empty()) throw CLI::ValidationError("--format", "unknown format '" + name + "'");
    return inj::format_from_path(path);
}

inj::Graph load_input(const std::string& input, const std::string& format) {
    if (std::filesystem::exists(input)) return inj::read_graph_file(input, parse_format(format, input));
    // fall back to corpus names
    return inj::corpus_get(input).graph;
}

json graph_header(const inj::Graph& g) {
    return json{{"n", g.vertex_count()}, {"m", g.edge_count()}};
}

std::vector<int> load_edge_colors(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw inj::Error(inj::Errc::ParseError, "cannot open coloring file '" + path + "'");
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw inj::Error(inj::Errc::ParseError, "coloring file is not JSON");
    if (doc.is_object() && doc.contains("colors")) doc = doc["colors"];
    if (!doc.is_array()) throw inj::Error(inj::Errc::ParseError, "expected a color array or {\"colors\": [...]}");
    return doc.get<std::vector<int>>();
}

std::vector<std::uint64_t> load_vertex_colors(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw inj::Error(inj::Errc::ParseError, "cannot open coloring file '" + path + "'");
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw inj::Error(inj::Errc::ParseError, "coloring file is not JSON");
    if (doc.is_object() && doc.contains("vertex_colors")) doc = doc["vertex_colors"];
    if (!doc.is_array()) throw inj::Error(inj::Errc::ParseError, "expected {\"vertex_colors\": [...]}");
    return doc.get<std::vector<std::uint64_t>>();
}

int run_solve(const std::string& input, const std::string& format, bool as_json, bool as_tsv) {
    inj::Graph g = load_input(input, format);
    auto result = inj::injective_chromatic_index(g);
    if (as_json) {
        std::cout << inj::write_result_json(g, "exact", result.index, result.coloring.colors, result.clique)
                  << '\n';
    } else if (as_tsv) {
        std::cout << inj::write_result_tsv(g, result.coloring.colors);
    } else {
        std::cout << "injective chromatic index: " << result.index << "\n"
                  << "clique lower bound: " << result.clique.size() << "\n";
    }
    return 0;
}

int run_bound(const std::string& input, const std::string& format, const std::string& method,
              bool trust_mad, bool as_json, bool as_tsv) {
    inj::Graph g = load_input(input, format);
    inj::BoundResult r;
    if (method == "general") r = inj::color_general(g);
    else if (method == "bipartite") r = inj::color_bipartite(g);
    else if (method == "subcubic-bipartite") r = inj::color_subcubic_bipartite(g);
    else if (method == "mad73") r = inj::color_subcubic_mad(g, inj::Ruleset::Mad73, trust_mad);
    else if (method == "mad83") r = inj::color_subcubic_mad(g, inj::Ruleset::Mad83, trust_mad);
    else if (method == "mad3") r = inj::color_subcubic_mad(g, inj::Ruleset::Mad3, trust_mad);
    else if (method == "outerplanar") r = inj::color_outerplanar_subcubic(g);
    else if (method == "tree") r = inj::color_tree(g);
    else if (method == "pathcycle") r = inj::color_path_or_cycle(g);
    else throw CLI::ValidationError("--method", "unknown method '" + method + "'");
    if (as_json) {
        std::cout << inj::write_result_json(g, r.method, r.bound_claimed, r.coloring.colors, {}) << '\n';
    } else if (as_tsv) {
        std::cout << inj::write_result_tsv(g, r.coloring.colors);
    } else {
        std::cout << "method: " << r.method << "\n"
                  << "claimed bound: " << r.bound_claimed << "\n"
                  << "colors used: " << r.coloring.palette_size() << "\n";
    }
    return 0;
}

int run_verify(const std::string& input, const std::string& format, const std::string& coloring_path,
               bool as_json) {
    inj::Graph g = load_input(input, format);
    inj::EdgeColoring c{load_edge_colors(coloring_path)};
    auto verdict = inj::verify_injective(g, c);
    if (as_json) {
        json out;
        out["graph"] = graph_header(g);
        out["method"] = "verify";
        out["valid"] = verdict.valid;
        if (!verdict.valid) {
            out["witness"] = json{{"e1", verdict.witness->e1},
                                  {"via", verdict.witness->via},
                                  {"e2", verdict.witness->e2},
                                  {"triangle", verdict.witness->triangle}};
        }
        std::cout << out.dump(2) << '\n';
    } else if (verdict.valid) {
        std::cout << "valid injective edge-coloring with " << c.palette_size() << " colors\n";
    } else {
        std::cout << "invalid: edges " << verdict.witness->e1 << " and " << verdict.witness->e2 << " share a color "
                  << (verdict.witness->triangle ? "in a triangle closed by edge " : "at distance 2 via edge ")
                  << verdict.witness->via << "\n";
    }
    return 0; // an invalid coloring is still an answer
}

int run_transform(const std::string& input, const std::string& format, const std::string& coloring_path,
                  const std::string& target, bool as_json) {
    inj::Graph g = load_input(input, format);
    if (target == "star") {
        inj::EdgeColoring c{load_edge_colors(coloring_path)};
        auto vc = inj::injective_to_star(g, c);
        if (as_json) {
            json out;
            out["graph"] = graph_header(g);
            out["method"] = "injective-to-star";
            out["vertex_colors"] = vc.colors;
            out["palette"] = vc.palette_size();
            out["valid"] = true;
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << "star coloring with " << vc.palette_size() << " colors\n";
        }
        return 0;
    }
    if (target == "injective") {
        inj::VertexColoring vc{load_vertex_colors(coloring_path)};
        auto c = inj::star_to_injective(g, vc);
        if (as_json) {
            json out;
            out["graph"] = graph_header(g);
            out["method"] = "star-to-injective";
            out["colors"] = c.colors;
            out["valid"] = true;
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << "injective edge-coloring with " << c.palette_size() << " colors\n";
        }
        return 0;
    }
    throw CLI::ValidationError("--to", "expected star or injective");
}

int run_mad(const std::string& input, const std::string& format, bool as_json) {
    inj::Graph g = load_input(input, format);
    inj::Rational mad = inj::mad_exact(g);
    if (as_json) {
        std::cout << inj::write_mad_json(g, mad) << '\n';
    } else {
        std::cout << "mad = " << mad.str() << "\n";
    }
    return 0;
}

int run_corpus(const std::string& export_dir, bool check) {
    bool all_ok = true;
    for (const auto& name : inj::corpus_list()) {
        const inj::NamedGraph& fixture = inj::corpus_get(name);
        const inj::Graph& g = fixture.graph;
        if (!export_dir.empty()) {
            std::filesystem::create_directories(export_dir);
            std::ofstream(export_dir + "/" + name + ".g6") << inj::write_graph6(g) << '\n';
            std::ofstream(export_dir + "/" + name + ".txt") << inj::write_edgelist(g);
        }
        if (check) {
            try {
                inj::corpus_structural_check(fixture);
            } catch (const inj::Error& err) {
                std::cout << name << "\tFIXTURE-ERROR\t" << err.what() << "\n";
                all_ok = false;
                continue;
            }
            auto result = inj::injective_chromatic_index(g);
            if (fixture.expected_index && result.index != *fixture.expected_index) {
                std::cout << name << "\tFAIL\texpected " << *fixture.expected_index << ", solver found "
                          << result.index << "\n";
                all_ok = false;
            } else {
                std::cout << name << "\tok\tindex " << result.index << "\n";
            }
        } else if (export_dir.empty()) {
            std::cout << name << "\tn=" << g.vertex_count() << "\tm=" << g.edge_count() << "\texpected="
                      << (fixture.expected_index ? std::to_string(*fixture.expected_index) : std::string("?"))
                      << "\n";
        }
    }
    if (check && !all_ok) return 5;
    return 0;
}

int run_probe(const std::string& mode, int max_n, int count, std::uint64_t seed, int enum_n, bool as_json) {
    bool bipartite = mode == "subcubic-bipartite";
    auto report = inj::conjecture_probe(bipartite, enum_n, max_n, count, seed);
    if (as_json) {
        json out;
        out["mode"] = mode;
        out["enumerated"] = report.enumerated;
        out["sampled"] = report.sampled;
        out["corpus_included"] = report.corpus_included;
        out["max_index"] = report.max_index;
        out["max_graph6"] = report.max_graph6;
        out["ceiling"] = report.conjecture_ceiling;
        json offenders = json::array();
        for (const auto& off : report.over_conjecture)
            offenders.push_back(json{{"index", off.index}, {"n", off.n}, {"graph6", off.graph6}});
        out["over_conjecture"] = offenders;
        out["over_theorem"] = report.over_theorem;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "mode: " << mode << "\n"
                  << "graphs: " << report.enumerated << " enumerated, " << report.sampled << " sampled, "
                  << report.corpus_included << " corpus\n"
                  << "max index observed: " << report.max_index << " (" << report.max_graph6 << ")\n";
        if (report.over_conjecture.empty()) {
            std::cout << "no graph above the conjectured ceiling of " << report.conjecture_ceiling << "\n";
        } else {
            std::cout << "POSSIBLE COUNTEREXAMPLES (index > " << report.conjecture_ceiling << "):\n";
            for (const auto& off : report.over_conjecture)
                std::cout << "  index " << off.index << "  n=" << off.n << "  " << off.graph6 << "\n";
        }
    }
    if (report.over_theorem) {
        std::cerr << "error: an index above 8 contradicts the 2(Delta-1)^2 bound; this is a bug\n";
        return 5;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"injective edge-coloring toolkit"};
    app.require_subcommand(1);

    std::string input, format, coloring_path, method, target, export_dir, probe_mode;
    bool as_json = false, as_tsv = false, trust_mad = false, check = false;
    int max_n = 10, count = 100, enum_n = 7;
    std::uint64_t seed = 1;

    auto add_io = [&](CLI::App* cmd, bool with_tsv) {
        cmd->add_option("input", input, "graph file or corpus name")->required();
        cmd->add_option("--format", format, "graph6 | edgelist | dimacs (default: by extension)")
            ->check(CLI::IsMember({"graph6", "edgelist", "dimacs"}));
        cmd->add_flag("--json", as_json, "emit JSON");
        if (with_tsv) cmd->add_flag("--tsv", as_tsv, "emit edge_u edge_v color rows");
    };

    auto* solve = app.add_subcommand("solve", "exact injective chromatic index");
    add_io(solve, true);

    auto* bound = app.add_subcommand("bound", "constructive upper-bound colorings");
    add_io(bound, true);
    bound->add_option("--method", method,
                      "general|bipartite|subcubic-bipartite|mad73|mad83|mad3|outerplanar|tree|pathcycle")
        ->required();
    bound->add_flag("--trust-mad", trust_mad, "skip the exact mad precondition check");

    auto* verify = app.add_subcommand("verify", "validate an injective edge-coloring");
    add_io(verify, false);
    verify->add_option("--coloring", coloring_path, "JSON coloring file")->required();

    auto* transform = app.add_subcommand("transform", "star/injective coloring transformations");
    add_io(transform, false);
    transform->add_option("--coloring", coloring_path, "JSON coloring file")->required();
    transform->add_option("--to", target, "star | injective")->required();

    auto* mad = app.add_subcommand("mad", "exact maximum average degree");
    add_io(mad, false);

    auto* corpus = app.add_subcommand("corpus", "named fixture graphs");
    corpus->add_option("--export", export_dir, "write graph6 and edge-list files to DIR");
    corpus->add_flag("--check", check, "re-verify expected values with the exact solver");

    auto* probe = app.add_subcommand("probe", "empirical sweep against the subcubic conjectures");
    probe->add_option("mode", probe_mode, "subcubic | subcubic-bipartite")->required();
    probe->add_option("--max-n", max_n, "largest sampled graph size")->required();
    probe->add_option("--count", count, "number of sampled graphs")->required();
    probe->add_option("--seed", seed, "random seed")->required();
    probe->add_option("--enum-n", enum_n, "exhaustive enumeration up to this size (default 7)");
    probe->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? 0 : 2; // all usage errors map to exit 2
    }

    try {
        if (solve->parsed()) return run_solve(input, format, as_json, as_tsv);
        if (bound->parsed()) return run_bound(input, format, method, trust_mad, as_json, as_tsv);
        if (verify->parsed()) return run_verify(input, format, coloring_path, as_json);
        if (transform->parsed()) return run_transform(input, format, coloring_path, target, as_json);
        if (mad->parsed()) return run_mad(input, format, as_json);
        if (corpus->parsed()) return run_corpus(export_dir, check);
        if (probe->parsed()) {
            if (probe_mode != "subcubic" && probe_mode != "subcubic-bipartite")
                throw CLI::ValidationError("mode", "expected subcubic or subcubic-bipartite");
            return run_probe(probe_mode, max_n, count, seed, enum_n, as_json);
        }
    } catch (const CLI::Error& err) {
        std::cerr << err.what() << "\n";
        return 2;
    } catch (const inj::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_code_for(err.code());
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 5;
    }
    return 2;
}
