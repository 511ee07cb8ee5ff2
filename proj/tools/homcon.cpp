// homcon: exact graph/clique-complex connectivity invariants over F2 and a
// seeded Monte Carlo harness.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "homcon/errors.hpp"
#include "homcon/experiments.hpp"
#include "homcon/hochster.hpp"
#include "homcon/invariants.hpp"

namespace {

using namespace homcon;

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open input graph: " + path);
    return read_edge_list(in);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw validation_error("cannot open output file: " + path);
    return file;
}

nlohmann::json ext_json(const ExtInt& v) {
    if (v.is_inf()) return "inf";
    return v.value();
}

std::vector<int> original_labels(const Graph& g, const VertexSet& set) {
    std::vector<int> out;
    for (int v : set.to_indices()) out.push_back(g.labels()[static_cast<size_t>(v)]);
    return out;
}

int run_sample(const std::string& out_path, int n, double p, uint64_t seed) {
    Graph g = er_sample(n, p, seed);
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    write_edge_list(out, g);
    return 0;
}

int run_invariants(const std::string& input, const std::string& out_path, int i,
                   int kappa_cap, bool with_norms, bool with_f, int f_cap, bool with_tau,
                   const SearchCaps& caps) {
    Graph g = load_graph(input);
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = g.edge_count();
    j["i"] = i;
    j["delta"] = ext_json(delta(g, i, caps));

    int cap = kappa_cap < 0 ? g.n() : std::min(kappa_cap, g.n());
    KappaResult kr = kappa(g, i, cap, caps);
    switch (kr.kind) {
        case KappaResult::Kind::value:
            j["kappa"] = kr.value;
            j["kappa_witness"] = original_labels(g, *kr.witness_c);
            j["kappa_witness_betti"] = *kr.witness_dim_h;
            break;
        case KappaResult::Kind::infinite: j["kappa"] = "inf"; break;
        case KappaResult::Kind::unknown_at_least:
            j["kappa"] = ">=" + std::to_string(kr.value);
            break;
    }
    if (with_norms) {
        SimplicialComplex x = build_clique_complex(g, i + 1, caps.max_faces);
        j["cocycle_norm"] = ext_json(cocycle_norm(x, i, caps));
        j["homology_norm"] = ext_json(homology_norm(x, i, caps));
    }
    if (with_f) {
        FResult f = f_invariant(g, f_cap < 0 ? g.n() : f_cap, caps);
        j["f"] = ext_json(f.value);
        j["f_partial"] = f.partial;
    }
    if (with_tau) j["tau"] = ext_json(tau(g, caps));

    std::ofstream file;
    open_out(file, out_path) << j.dump() << "\n";
    return 0;
}

int run_betti(const std::string& input, const std::string& out_path, const std::string& format,
              bool grid, int n_cap, const SearchCaps& caps) {
    Graph g = load_graph(input);
    SimplicialComplex x = build_clique_complex(g, std::max(0, g.n() - 1), caps.max_faces);
    BettiTable table = betti_table(x, g.n(), n_cap);
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    if (grid) {
        out << table.to_grid();
    } else if (format == "json") {
        nlohmann::json j;
        j["n"] = table.n;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [key, val] : table.entries) {
            auto [h, l] = key;
            rows.push_back({{"i", h}, {"j", l - h}, {"internal", l}, {"beta", val}});
        }
        j["entries"] = rows;
        j["pdim"] = projective_dimension(table);
        out << j.dump() << "\n";
    } else {
        out << table.to_csv();
    }
    return 0;
}

int run_witness(const std::string& input, const std::string& out_path, const std::string& kind,
                const std::string& face_csv, int i, int cap, const SearchCaps& caps) {
    Graph g = load_graph(input);
    nlohmann::json j;
    if (kind == "cross") {
        Face a;
        std::istringstream is(face_csv);
        std::string item;
        while (std::getline(is, item, ',')) a.push_back(std::stoi(item));
        auto b = cross_polytope_witness(g, a);
        j["face"] = a;
        if (b) {
            j["status"] = "ok";
            j["antipodes"] = *b;
        } else {
            j["status"] = "failure";
        }
    } else if (kind == "kappa") {
        KappaResult kr = kappa(g, i, cap < 0 ? g.n() : std::min(cap, g.n()), caps);
        if (kr.kind == KappaResult::Kind::value) {
            j["kappa"] = kr.value;
            j["witness"] = original_labels(g, *kr.witness_c);
            j["betti"] = *kr.witness_dim_h;
        } else if (kr.kind == KappaResult::Kind::infinite) {
            j["kappa"] = "inf";
        } else {
            j["kappa"] = ">=" + std::to_string(kr.value);
        }
    } else {
        throw validation_error("witness: kind must be cross or kappa");
    }
    std::ofstream file;
    open_out(file, out_path) << j.dump() << "\n";
    return 0;
}

int run_experiment(ExperimentConfig cfg) {
    std::ofstream file;
    std::ostream& out = open_out(file, cfg.out_path);
    switch (cfg.kind) {
        case ExperimentKind::equality: {
            EqualityResult res = run_equality_experiment(cfg);
            write_records(out, cfg, res);
            for (const auto& s : res.summaries) {
                std::cerr << "n=" << s.n << " trials=" << s.trials << " decided=" << s.decided
                          << " unknown=" << s.unknown << " both_inf=" << s.both_infinite
                          << " equal=" << s.equal << " fraction=" << s.fraction << " wilson=["
                          << s.lo << "," << s.hi << "]\n";
            }
            break;
        }
        case ExperimentKind::concentration: {
            ConcentrationResult res = run_concentration_experiment(cfg);
            write_records(out, cfg, res);
            std::cerr << "pass " << res.summary.passed << "/" << res.summary.trials << "\n";
            break;
        }
        case ExperimentKind::chernoff: {
            ChernoffSummary s = run_chernoff_experiment(cfg);
            out << csv_header(ExperimentKind::chernoff) << "\n"
                << s.m << "," << s.p << "," << s.eps << "," << s.draws << "," << s.tail_count
                << "," << s.tail_freq << "," << s.bound << "," << s.std_error << ","
                << (s.pass ? 1 : 0) << "\n";
            std::cerr << "tail_freq=" << s.tail_freq << " bound=" << s.bound
                      << (s.pass ? "<= bound+3se" : " EXCEEDS bound+3se") << "\n";
            break;
        }
        case ExperimentKind::delicate: {
            DelicateResult res = run_delicate_scan(cfg);
            write_records(out, cfg, res);
            std::cerr << "star violations total: " << res.total_star_violations << "\n";
            break;
        }
        case ExperimentKind::f_tau: {
            FTauResult res = run_f_and_tau_survey(cfg);
            write_records(out, cfg, res);
            std::cerr << "f_ok " << res.f_ok_count << ", tau_ok " << res.tau_ok_count << " of "
                      << res.records.size() << "\n";
            break;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connectivity invariants of graphs and clique complexes over F2"};
    app.require_subcommand(1);

    std::string out_path;
    uint64_t seed = 1;
    std::string format = "csv";
    SearchCaps caps;
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--format", format, "csv|json");
    app.add_option("--cap-subsets", caps.max_subsets, "subset enumeration cap per size class");
    app.add_option("--cap-faces", caps.max_faces, "clique enumeration cap");
    app.add_option("--cap-support", caps.max_support, "support enumeration cap per size class");
    app.add_option("--cap-classes", caps.max_classes, "cohomology class enumeration cap");
    app.add_option("--cap-candidates", caps.max_candidates, "adapted-family candidate cap");

    auto* sample = app.add_subcommand("sample", "sample an Erdos-Renyi graph as an edge list");
    int s_n = 10;
    double s_p = 0.5;
    sample->add_option("--n", s_n, "vertex count")->required();
    sample->add_option("--p", s_p, "edge probability")->required();

    auto* inv = app.add_subcommand("invariants", "delta/kappa (and norms, f, tau) of a graph");
    std::string in_path;
    int i_dim = 1, kappa_cap = -1, f_cap = -1;
    bool with_norms = false, with_f = false, with_tau = false;
    inv->add_option("--input", in_path, "edge-list file")->required();
    inv->add_option("--i", i_dim, "dimension");
    inv->add_option("--kappa-cap", kappa_cap, "kappa search size cap (default n)");
    inv->add_flag("--norms", with_norms, "also compute cocycle/homology norms");
    inv->add_flag("--f", with_f, "also compute f");
    inv->add_option("--f-cap", f_cap, "C size cap for f (default n)");
    inv->add_flag("--tau", with_tau, "also compute tau");

    auto* betti = app.add_subcommand("betti", "graded Betti table of the clique complex");
    std::string b_input;
    bool b_grid = false;
    int b_cap = 16;
    betti->add_option("--input", b_input, "edge-list file")->required();
    betti->add_flag("--grid", b_grid, "pretty text grid");
    betti->add_option("--n-cap", b_cap, "vertex-count cap for the 2^n subset sum");

    auto* wit = app.add_subcommand("witness", "cross-polytope or kappa witness");
    std::string w_input, w_kind = "cross", w_face;
    int w_i = 1, w_cap = -1;
    wit->add_option("--input", w_input, "edge-list file")->required();
    wit->add_option("--kind", w_kind, "cross|kappa");
    wit->add_option("--face", w_face, "comma-separated clique for kind=cross");
    wit->add_option("--i", w_i, "dimension for kind=kappa");
    wit->add_option("--cap", w_cap, "size cap for kind=kappa");

    auto* exp = app.add_subcommand("experiment", "run a Monte Carlo experiment");
    std::string config_path;
    std::vector<std::string> defines;
    exp->add_option("--config", config_path, "flat key=value config file");
    exp->add_option("--set,-s", defines, "override config entries (key=value)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sample->parsed()) return run_sample(out_path, s_n, s_p, seed);
        if (inv->parsed())
            return run_invariants(in_path, out_path, i_dim, kappa_cap, with_norms, with_f, f_cap,
                                  with_tau, caps);
        if (betti->parsed()) return run_betti(b_input, out_path, format, b_grid, b_cap, caps);
        if (wit->parsed()) return run_witness(w_input, out_path, w_kind, w_face, w_i, w_cap, caps);
        if (exp->parsed()) {
            ExperimentConfig cfg;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw homcon::validation_error("cannot open config: " + config_path);
                cfg = load_config_file(in);
            }
            for (const std::string& d : defines) {
                size_t eq = d.find('=');
                if (eq == std::string::npos)
                    throw homcon::validation_error("--set needs key=value: " + d);
                apply_config_kv(cfg, d.substr(0, eq), d.substr(eq + 1));
            }
            cfg.caps = caps;
            if (!out_path.empty()) cfg.out_path = out_path;
            if (format != "csv") cfg.format = format;
            if (seed != 1) cfg.master_seed = seed;
            return run_experiment(std::move(cfg));
        }
    } catch (const homcon::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const homcon::resource_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
