// Command-line front end for the vertex Seidel energy library.
//
// Exit codes: 0 success, 1 check failure, 2 usage/parse error, 3 numerical
// failure (eigensolver non-convergence, near-pole evaluation).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seidel/checks.hpp"
#include "seidel/coulson.hpp"
#include "seidel/eigen.hpp"
#include "seidel/energy.hpp"
#include "seidel/errors.hpp"
#include "seidel/graph.hpp"
#include "seidel/graph_io.hpp"
#include "seidel/spectral.hpp"

namespace {

using namespace seidel;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- JSON ----
// Hand-rolled emitter: fixed key order, %.17g numbers, no locale, no
// whitespace — the same input always produces byte-identical output.

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

std::string json_array(const std::vector<double>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += json_number(xs[i]);
    }
    return out + "]";
}

std::string json_checks(const std::vector<CheckResult>& checks) {
    std::string out = "[";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        if (i) out += ",";
        out += "{\"name\":" + json_string(checks[i].name) +
               ",\"pass\":" + (checks[i].pass ? "true" : "false") +
               ",\"detail\":" + json_string(checks[i].detail) + "}";
    }
    return out + "]";
}

std::string constancy_params(const Constancy& c) {
    switch (c.mechanism) {
        case ConstancyMechanism::s2_scalar:
            return "[" + json_number(static_cast<double>(c.alpha)) + "]";
        case ConstancyMechanism::two_abs:
            return "[" + json_number(c.a) + "," + json_number(c.b) + "]";
        case ConstancyMechanism::none_detected:
            break;
    }
    return "[]";
}

std::string report_json(const EnergyReport& r, const std::vector<CheckResult>& checks) {
    return "{\"n\":" + std::to_string(r.n) +
           ",\"per_vertex\":" + json_array(r.per_vertex) +
           ",\"total\":" + json_number(r.total) +
           ",\"upper_bound\":" + json_number(r.upper_bound) +
           ",\"holder_lower\":" + json_array(r.holder_lower) +
           ",\"constancy\":{\"tag\":" + json_string(constancy_tag(r.constancy.mechanism)) +
           ",\"params\":" + constancy_params(r.constancy) + "}" +
           ",\"checks\":" + json_checks(checks) + "}";
}

// ----------------------------------------------------------------- I/O ----

std::string read_all(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot open input file: " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const std::string& path) { return parse_graph_auto(read_all(path)); }

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw usage_error("cannot open output file: " + out_path);
    out << text;
}

// ---------------------------------------------------------------- gen -----

Graph make_family(const std::string& spec) {
    if (spec == "fig1") return figure1_order6();
    if (spec == "petersen-mod") return modified_petersen();
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw usage_error("unknown family spec \"" + spec +
                          "\" (expected Kn:<n> | Krs:<r>,<s> | paley:<q> | fig1 | petersen-mod)");
    const std::string head = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != s.size() || s.empty())
            throw usage_error("bad number \"" + s + "\" in family spec \"" + spec + "\"");
        return value;
    };
    if (head == "Kn") return complete_graph(to_int(args));
    if (head == "paley") return paley_graph(to_int(args));
    if (head == "Krs") {
        const std::size_t comma = args.find(',');
        if (comma == std::string::npos)
            throw usage_error("Krs spec needs two part sizes, e.g. Krs:2,3");
        return complete_bipartite(to_int(args.substr(0, comma)), to_int(args.substr(comma + 1)));
    }
    throw usage_error("unknown family \"" + head + "\"");
}

VertexSet parse_set(const std::string& text) {
    VertexSet x;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string token = text.substr(pos, comma - pos);
        token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
        if (!token.empty()) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(token, &used);
            } catch (const std::exception&) {
                used = std::string::npos;
            }
            if (used != token.size()) throw usage_error("bad vertex \"" + token + "\" in --set");
            x.push_back(v);
        }
        pos = comma + 1;
    }
    return x;
}

// -------------------------------------------------------------- tables ----

std::string energy_table(const EnergyReport& r) {
    std::ostringstream out;
    char line[128];
    for (int i = 0; i < r.n; ++i) {
        std::snprintf(line, sizeof(line), "v%d %.6f\n", i, r.per_vertex[i]);
        out << line;
    }
    std::snprintf(line, sizeof(line), "total %.6f\n", r.total);
    out << line;
    out << "constancy " << constancy_tag(r.constancy.mechanism);
    if (r.constancy.mechanism == ConstancyMechanism::s2_scalar)
        out << " (alpha = " << r.constancy.alpha << ")";
    if (r.constancy.mechanism == ConstancyMechanism::two_abs) {
        std::snprintf(line, sizeof(line), " (a = %.6f, b = %.6f)", r.constancy.a, r.constancy.b);
        out << line;
    }
    out << "\n";
    return out.str();
}

std::string bounds_table(const EnergyReport& r, const UpperBoundCheck& ub) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof(line), "upper_bound %.6f\n", ub.bound);
    out << line;
    out << "equality " << (ub.equality_all ? "yes" : "no") << "\n";
    for (int i = 0; i < r.n; ++i) {
        std::snprintf(line, sizeof(line), "v%d energy %.6f holder %.6f attained %s\n", i,
                      r.per_vertex[i], r.holder_lower[i], ub.attained[i] ? "yes" : "no");
        out << line;
    }
    return out.str();
}

std::string checks_table(const std::vector<CheckResult>& checks) {
    std::ostringstream out;
    std::size_t width = 0;
    for (const CheckResult& c : checks) width = std::max(width, c.name.size());
    for (const CheckResult& c : checks) {
        out << c.name << std::string(width - c.name.size() + 2, ' ')
            << (c.pass ? "PASS" : "FAIL") << "  " << c.detail << "\n";
    }
    const std::size_t passed =
        static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(),
                                               [](const CheckResult& c) { return c.pass; }));
    out << passed << "/" << checks.size() << " checks passed\n";
    return out.str();
}

// -------------------------------------------------------------- main ------

int run(int argc, char** argv) {
    CLI::App app{"vertex Seidel energy of graphs: closed forms, bounds, and the "
                 "Coulson integral cross-check"};
    app.require_subcommand(1);

    std::string input, out_path, genspec, set_text;
    bool json = false;
    int vertex = 0;
    std::uint64_t seed = kDefaultCheckSeed;
    std::string corpus_dir;
    QuadratureConfig quad;

    auto add_io = [&](CLI::App* cmd, bool with_json = true) {
        cmd->add_option("input", input, "edge-list or graph6 file, - for stdin")->required();
        cmd->add_option("--out", out_path, "write output here instead of stdout");
        if (with_json) cmd->add_flag("--json", json, "machine-readable output");
    };
    auto add_quad = [&](CLI::App* cmd) {
        cmd->add_option("--coulson-tol", quad.target_tol, "quadrature refinement tolerance");
        cmd->add_option("--coulson-panels", quad.panels, "initial Gauss-Legendre panel count");
        cmd->add_option("--coulson-budget", quad.max_evaluations, "max integrand evaluations");
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a named family as an edge list");
    gen->add_option("spec", genspec, "Kn:<n> | Krs:<r>,<s> | paley:<q> | fig1 | petersen-mod")
        ->required();
    gen->add_option("--out", out_path, "write output here instead of stdout");

    CLI::App* energy = app.add_subcommand("energy", "per-vertex energies and constancy tag");
    add_io(energy);

    CLI::App* bounds = app.add_subcommand("bounds", "sqrt(n-1) upper and Hoelder lower bounds");
    add_io(bounds);

    CLI::App* coulson = app.add_subcommand("coulson", "integral cross-check for one vertex");
    add_io(coulson);
    coulson->add_option("--vertex", vertex, "vertex index (default 0)");
    add_quad(coulson);

    CLI::App* sw = app.add_subcommand("switch", "Seidel switch with respect to --set");
    add_io(sw, false);
    sw->add_option("--set", set_text, "comma-separated vertex subset, empty for {}");

    CLI::App* comp = app.add_subcommand("complement", "graph complement as an edge list");
    add_io(comp, false);

    CLI::App* spectrum = app.add_subcommand("spectrum", "Seidel eigenvalues, ascending");
    add_io(spectrum);

    CLI::App* check = app.add_subcommand("check", "run the invariant battery");
    check->add_option("input", input, "edge-list or graph6 file, - for stdin");
    check->add_option("--corpus", corpus_dir, "directory of graph files to check instead");
    check->add_option("--out", out_path, "write output here instead of stdout");
    check->add_flag("--json", json, "machine-readable output");
    check->add_option("--seed", seed, "seed for the random switching subsets");
    add_quad(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (gen->parsed()) {
        emit(out_path, write_edge_list(make_family(genspec)));
        return 0;
    }
    if (energy->parsed()) {
        const EnergyReport r = analyze(load_graph(input));
        emit(out_path, json ? report_json(r, {}) + "\n" : energy_table(r));
        return 0;
    }
    if (bounds->parsed()) {
        const Graph g = load_graph(input);
        const SeidelMatrix s = seidel_matrix(g);
        const EnergyReport r = analyze(g);
        const UpperBoundCheck ub = upper_bound_check(eigen_decompose(s), s);
        if (json) {
            std::string flags = "[";
            for (int i = 0; i < r.n; ++i)
                flags += std::string(i ? "," : "") + (ub.attained[i] ? "true" : "false");
            flags += "]";
            emit(out_path, "{\"n\":" + std::to_string(r.n) +
                               ",\"per_vertex\":" + json_array(r.per_vertex) +
                               ",\"upper_bound\":" + json_number(ub.bound) +
                               ",\"equality\":" + (ub.equality_all ? "true" : "false") +
                               ",\"attained\":" + flags +
                               ",\"holder_lower\":" + json_array(r.holder_lower) + "}\n");
        } else {
            emit(out_path, bounds_table(r, ub));
        }
        return 0;
    }
    if (coulson->parsed()) {
        const Graph g = load_graph(input);
        if (vertex < 0 || vertex >= g.order())
            throw usage_error("--vertex " + std::to_string(vertex) + " out of range for order " +
                              std::to_string(g.order()));
        const CoulsonResult r = coulson_energy(seidel_matrix(g), vertex, quad);
        std::ostringstream out;
        if (json) {
            out << "{\"vertex\":" << vertex << ",\"value\":" << json_number(r.value)
                << ",\"abs_error_estimate\":" << json_number(r.abs_error_estimate)
                << ",\"nodes_used\":" << r.nodes_used
                << ",\"spectral_reference\":" << json_number(r.spectral_reference)
                << ",\"agreement\":" << json_number(r.agreement)
                << ",\"budget_exhausted\":" << (r.budget_exhausted ? "true" : "false") << "}\n";
        } else {
            char line[160];
            std::snprintf(line, sizeof(line),
                          "value %.6f\nspectral %.6f\nagreement %.3e\nnodes %ld\n", r.value,
                          r.spectral_reference, r.agreement, r.nodes_used);
            out << line;
            if (r.budget_exhausted) out << "warning: evaluation budget exhausted\n";
        }
        emit(out_path, out.str());
        return 0;
    }
    if (sw->parsed()) {
        emit(out_path, write_edge_list(seidel_switch(load_graph(input), parse_set(set_text))));
        return 0;
    }
    if (comp->parsed()) {
        emit(out_path, write_edge_list(complement(load_graph(input))));
        return 0;
    }
    if (spectrum->parsed()) {
        const EigenDecomposition d = eigen_decompose(seidel_matrix(load_graph(input)));
        std::ostringstream out;
        if (json) {
            out << "{\"n\":" << d.eigenvalues.size()
                << ",\"eigenvalues\":" << json_array(d.eigenvalues) << "}\n";
        } else {
            char line[64];
            for (double theta : d.eigenvalues) {
                std::snprintf(line, sizeof(line), "%.6f\n", theta);
                out << line;
            }
        }
        emit(out_path, out.str());
        return 0;
    }
    if (check->parsed()) {
        if (input.empty() == corpus_dir.empty())
            throw usage_error("check needs exactly one of an input file or --corpus <dir>");
        CheckOptions opts;
        opts.seed = seed;
        opts.quadrature = quad;
        bool all_ok = true;
        std::ostringstream out;
        if (corpus_dir.empty()) {
            const Graph g = load_graph(input);
            const auto results = run_checks(g, opts);
            all_ok = all_passed(results);
            if (json)
                out << report_json(analyze(g), results) << "\n";
            else
                out << checks_table(results);
        } else {
            std::vector<std::filesystem::path> files;
            for (const auto& entry : std::filesystem::directory_iterator(corpus_dir))
                if (entry.is_regular_file()) files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            if (files.empty()) throw usage_error("corpus directory has no files: " + corpus_dir);
            if (json) out << "[";
            bool first = true;
            for (const auto& file : files) {
                Graph g = parse_graph_auto(read_all(file.string()));
                const auto results = run_checks(g, opts);
                all_ok = all_passed(results) && all_ok;
                if (json) {
                    if (!first) out << ",";
                    out << "{\"file\":" << json_string(file.filename().string()) << ","
                        << report_json(analyze(g), results).substr(1) << "";
                } else {
                    out << "== " << file.filename().string() << " ==\n" << checks_table(results);
                }
                first = false;
            }
            if (json) out << "]\n";
        }
        emit(out_path, out.str());
        return all_ok ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const convergence_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const near_pole_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const index_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {  // invalid_parameter, unsupported_field
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
