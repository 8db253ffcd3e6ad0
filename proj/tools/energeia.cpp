#include "energeia/errors.hpp"
#include "energeia/hodge.hpp"
#include "energeia/io_json.hpp"
#include "energeia/spectral.hpp"
#include "energeia/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using energeia::EnergizedComplex;
using energeia::EnergyAssignment;
using energeia::Geometry;
using nlohmann::json;

struct GlobalOpts {
    uint64_t seed = 0;
    int threads = 1; // accepted for interface stability; execution is serial
    std::string format = "json";
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text << "\n";
    else
        energeia::write_text_file(out_path, text);
}

Geometry load_geometry(const std::string& path) {
    return energeia::geometry_from_json(energeia::load_json_file(path));
}

EnergyAssignment load_or_sample(const Geometry& g, const std::string& h_path,
                                const std::string& sampler, uint64_t seed) {
    if (!h_path.empty() && !sampler.empty())
        throw energeia::IoError("give either an energy file or a sampler, not both");
    if (!h_path.empty())
        return energeia::energy_from_json(g, energeia::load_json_file(h_path));
    if (!sampler.empty()) return energeia::sample_named(g, sampler, seed);
    throw energeia::IoError("an energy file (--h) or sampler (--sampler) is required");
}

std::vector<std::pair<int, int>> parse_edges(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& tok : split_list(text)) {
        size_t dash = tok.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
            throw energeia::IoError("edge '" + tok + "' must look like 1-2");
        try {
            edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
        } catch (const std::exception&) {
            throw energeia::IoError("edge '" + tok + "' must look like 1-2");
        }
    }
    return edges;
}

json complex_json(const std::complex<double>& z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

int run_gen(const GlobalOpts& g, const std::string& kind, int n, const std::string& edges,
            int vertices, double density, const std::string& out) {
    Geometry geom;
    if (kind == "complete") {
        if (n < 1) throw energeia::IoError("complete needs --n >= 1");
        geom = energeia::generate_complete(n);
    } else if (kind == "whitney") {
        if (edges.empty()) throw energeia::IoError("whitney needs --edges");
        geom = energeia::generate_whitney(parse_edges(edges));
    } else if (kind == "random") {
        if (vertices < 1) throw energeia::IoError("random needs --vertices >= 1");
        geom = energeia::generate_random(vertices, density, g.seed);
    } else {
        throw energeia::IoError("unknown kind '" + kind + "' (complete|whitney|random)");
    }
    emit(out, energeia::geometry_to_json(geom).dump(2));
    return 0;
}

int run_energize(const GlobalOpts& g, const std::string& in, const std::string& h_path,
                 const std::string& sampler, const std::string& out) {
    Geometry geom = load_geometry(in);
    EnergyAssignment h = load_or_sample(geom, h_path, sampler, g.seed);
    emit(out, energeia::energy_to_json(geom, h).dump(2));
    return 0;
}

int run_matrix(const GlobalOpts& g, const std::string& in, const std::string& h_path,
               const std::string& sampler, const std::string& emit_list,
               const std::string& out) {
    Geometry geom = load_geometry(in);
    EnergizedComplex e = energeia::energize(geom, load_or_sample(geom, h_path, sampler, g.seed));
    auto names = split_list(emit_list);
    auto build = [&](const std::string& name) -> energeia::SquareMatrix {
        if (name == "L") return energeia::build_L(e);
        if (name == "g") return energeia::build_g(e);
        if (name == "S") return energeia::checkerboard(e);
        if (name == "P") return energeia::parity_matrix(e);
        if (name == "gstarL") return energeia::green_star_product(e);
        throw energeia::IoError("unknown matrix '" + name + "' (L|g|S|P|gstarL)");
    };
    if (g.format == "csv") {
        if (names.size() != 1)
            throw energeia::IoError("csv output emits exactly one matrix per run");
        emit(out, energeia::matrix_to_csv(build(names[0])));
        return 0;
    }
    json doc{{"schema", energeia::kSchemaTag}};
    for (const auto& name : names) doc[name] = energeia::matrix_to_json(build(name));
    emit(out, doc.dump(2));
    return 0;
}

int run_energy(const GlobalOpts& g, const std::string& in, const std::string& h_path,
               const std::string& sampler, const std::string& report, const std::string& out) {
    Geometry geom = load_geometry(in);
    EnergizedComplex e = energeia::energize(geom, load_or_sample(geom, h_path, sampler, g.seed));
    json doc{{"schema", energeia::kSchemaTag}};
    for (const auto& item : split_list(report)) {
        if (item == "chi")
            doc["chi"] = energeia::value_to_json(energeia::chi(e));
        else if (item == "omega")
            doc["omega"] = energeia::value_to_json(energeia::omega_quadratic(e));
        else if (item == "omega3")
            doc["omega3"] = energeia::value_to_json(energeia::omega_cubic(e));
        else if (item == "curvature") {
            json curv = json::object();
            for (const auto& s : geom.simplices)
                curv[energeia::simplex_key(s)] =
                    energeia::value_to_json(energeia::curvature(e, s));
            doc["curvature"] = curv;
        } else {
            throw energeia::IoError("unknown report item '" + item +
                                    "' (chi|omega|omega3|curvature)");
        }
    }
    emit(out, doc.dump(2));
    return 0;
}

int run_spectral(const GlobalOpts& g, const std::string& in, const std::string& h_path,
                 const std::string& sampler, const std::string& zeta_list, int flow_steps,
                 double flow_t, const std::string& out) {
    Geometry geom = load_geometry(in);
    EnergizedComplex e = energeia::energize(geom, load_or_sample(geom, h_path, sampler, g.seed));
    std::vector<std::complex<double>> s_values;
    for (const auto& tok : split_list(zeta_list)) s_values.push_back(energeia::parse_complex(tok));
    energeia::SpectralReport rep = energeia::zeta(e, s_values);
    if (g.format == "csv") {
        std::ostringstream csv;
        csv << "re_s,im_s,re_zeta,im_zeta\n";
        for (const auto& [s, z] : rep.zeta_samples)
            csv << s.real() << "," << s.imag() << "," << z.real() << "," << z.imag() << "\n";
        emit(out, csv.str());
        return 0;
    }
    json doc{{"schema", energeia::kSchemaTag}};
    doc["eigenvalues_LstarL"] = rep.eigenvalues;
    json samples = json::array();
    for (const auto& [s, z] : rep.zeta_samples)
        samples.push_back(json{{"s", complex_json(s)}, {"zeta", complex_json(z)}});
    doc["zeta"] = samples;
    if (flow_t != 0.0) {
        doc["schrodinger_trace_t"] = flow_t;
        doc["schrodinger_trace"] = complex_json(energeia::schrodinger_trace(e, flow_t));
    }
    if (flow_steps > 0) {
        auto traj = energeia::nonlinear_flow(e, static_cast<size_t>(flow_steps));
        json flow = json::array();
        for (const auto& h : traj) flow.push_back(energeia::energy_to_json(geom, h)["h"]);
        doc["flow"] = flow;
    }
    emit(out, doc.dump(2));
    return 0;
}

int run_verify(const GlobalOpts& g, const std::string& in, const std::string& h_path,
               const std::string& sampler, const std::string& suite_list,
               const std::string& out) {
    Geometry geom = load_geometry(in);
    EnergizedComplex e = energeia::energize(geom, load_or_sample(geom, h_path, sampler, g.seed));
    std::vector<energeia::TheoremId> suite;
    if (suite_list.empty()) {
        suite = energeia::all_theorems();
    } else {
        for (const auto& name : split_list(suite_list))
            suite.push_back(energeia::theorem_from_name(name));
    }
    if (suite.empty()) throw energeia::IoError("the suite must name at least one theorem");
    auto outcomes = energeia::verify_suite(e, suite);
    json arr = json::array();
    bool failed = false;
    for (const auto& o : outcomes) {
        std::string status = o.status == energeia::VerifyStatus::Pass ? "pass"
                             : o.status == energeia::VerifyStatus::Fail ? "fail"
                                                                        : "inapplicable";
        failed = failed || o.status == energeia::VerifyStatus::Fail;
        json rec{{"id", energeia::theorem_name(o.id)}, {"status", status}};
        if (!o.witness.empty()) rec["witness"] = o.witness;
        if (!o.reason.empty()) rec["reason"] = o.reason;
        arr.push_back(rec);
        std::cout << status << " " << energeia::theorem_name(o.id);
        if (!o.witness.empty()) std::cout << " [" << o.witness << "]";
        if (!o.reason.empty()) std::cout << " (" << o.reason << ")";
        std::cout << "\n";
    }
    if (!out.empty())
        energeia::write_text_file(out, json{{"schema", energeia::kSchemaTag},
                                            {"outcomes", arr}}
                                           .dump(2));
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"energized simplicial complexes: matrices, energies, spectra, theorem checks"};
    app.require_subcommand(1);
    // The energy-file option is spelled --h, so help must not own the short -h.
    app.set_help_flag("--help", "print help and exit");
    GlobalOpts g;
    app.add_option("--seed", g.seed, "random seed for samplers and generators");
    app.add_option("--threads", g.threads, "worker threads (execution is deterministic)");
    app.add_option("--format", g.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string kind, edges, in, h_path, sampler, out, report = "chi,omega,omega3,curvature";
    std::string emit_list = "L,g,S,gstarL", zeta_list, suite_list;
    int n = 0, vertices = 0, flow_steps = 0;
    double density = 0.5, flow_t = 0.0;

    auto* gen = app.add_subcommand("gen", "generate a geometry");
    gen->set_help_flag("--help", "print help and exit");
    gen->fallthrough();
    gen->add_option("--kind", kind, "complete|whitney|random")->required();
    gen->add_option("--n", n, "vertex count for complete");
    gen->add_option("--edges", edges, "whitney edge list, e.g. 1-2,2-3");
    gen->add_option("--vertices", vertices, "vertex count for random");
    gen->add_option("--density", density, "face density in [0,1] for random");
    gen->add_option("--out", out, "output file (stdout when omitted)");

    auto* energize = app.add_subcommand("energize", "attach an energy assignment");
    energize->set_help_flag("--help", "print help and exit");
    energize->fallthrough();
    energize->add_option("--in", in, "geometry json")->required();
    energize->add_option("--h", h_path, "energy json");
    energize->add_option("--sampler", sampler, "one of: " + [] {
        std::string s;
        for (const auto& name : energeia::sampler_names()) s += (s.empty() ? "" : ", ") + name;
        return s;
    }());
    energize->add_option("--out", out, "output file");

    auto* matrix = app.add_subcommand("matrix", "emit derived matrices");
    matrix->set_help_flag("--help", "print help and exit");
    matrix->fallthrough();
    matrix->add_option("--in", in, "geometry json")->required();
    matrix->add_option("--h", h_path, "energy json");
    matrix->add_option("--sampler", sampler, "named sampler");
    matrix->add_option("--emit", emit_list, "comma list of L,g,S,P,gstarL");
    matrix->add_option("--out", out, "output file");

    auto* energy = app.add_subcommand("energy", "report scalar energies");
    energy->set_help_flag("--help", "print help and exit");
    energy->fallthrough();
    energy->add_option("--in", in, "geometry json")->required();
    energy->add_option("--h", h_path, "energy json");
    energy->add_option("--sampler", sampler, "named sampler");
    energy->add_option("--report", report, "comma list of chi,omega,omega3,curvature");
    energy->add_option("--out", out, "output file");

    auto* spectral = app.add_subcommand("spectral", "spectra, zeta samples, flows");
    spectral->set_help_flag("--help", "print help and exit");
    spectral->fallthrough();
    spectral->add_option("--in", in, "geometry json")->required();
    spectral->add_option("--h", h_path, "energy json");
    spectral->add_option("--sampler", sampler, "named sampler");
    spectral->add_option("--zeta", zeta_list, "complex s values, e.g. 0,1,0.5+2i");
    spectral->add_option("--flow-steps", flow_steps, "nonlinear flow steps (complex64 ring)");
    spectral->add_option("--flow-t", flow_t, "Schroedinger trace time");
    spectral->add_option("--out", out, "output file");

    auto* verify = app.add_subcommand("verify", "run theorem suites");
    verify->set_help_flag("--help", "print help and exit");
    verify->fallthrough();
    verify->add_option("--in", in, "geometry json")->required();
    verify->add_option("--h", h_path, "energy json");
    verify->add_option("--sampler", sampler, "named sampler");
    verify->add_option("--suite", suite_list, "comma list of theorem ids (default: all)");
    verify->add_option("--out", out, "verdicts json file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // help requests and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(g, kind, n, edges, vertices, density, out);
        if (energize->parsed()) return run_energize(g, in, h_path, sampler, out);
        if (matrix->parsed()) return run_matrix(g, in, h_path, sampler, emit_list, out);
        if (energy->parsed()) return run_energy(g, in, h_path, sampler, report, out);
        if (spectral->parsed())
            return run_spectral(g, in, h_path, sampler, zeta_list, flow_steps, flow_t, out);
        if (verify->parsed()) return run_verify(g, in, h_path, sampler, suite_list, out);
    } catch (const energeia::IoError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const energeia::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 2;
}
