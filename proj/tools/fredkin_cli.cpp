// Command-line frontend: every library computation as a reproducible run.
// Exit codes: 0 ok, 2 config error, 3 convergence failure, 4 cap exceeded,
// 5 verification mismatch.

#include <Eigen/Core>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fredkin/fredkin.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace fredkin;

namespace {

struct RunConfig {
    std::string command;
    int sites = 0;
    int colors = 1;
    std::string boundary = "open";
    double alpha = 1.0;
    double beta = 1.0;
    int cut = 0;  // 0 = sweep all cuts
    std::string form = "projector";
    std::string mode = "formula";
    std::string format;  // per-command default
    std::string out_path;
    int chi = 0;  // 0 = exact bond dimension
    int count = 8;
    unsigned seed = 12345;
    int threads = 1;
    bool verify = false;
    bool periodic = false;
    bool anomalous = false;
    std::string class_id;  // "a,b" for the state command
};

ModelForm parse_form(const std::string& s) {
    if (s == "projector") return ModelForm::Projector;
    if (s == "pauli") return ModelForm::Pauli;
    if (s == "gate") return ModelForm::FredkinGate;
    throw CLI::ValidationError("--form", "unknown form: " + s);
}

BoundarySpec parse_boundary(const RunConfig& cfg) {
    if (cfg.periodic || cfg.boundary == "periodic") return BoundarySpec::periodic();
    if (cfg.boundary == "open") return BoundarySpec::open(cfg.alpha, cfg.beta);
    throw CLI::ValidationError("--boundary", "unknown boundary: " + cfg.boundary);
}

std::string fmt(double x, int digits = 12) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

json config_echo(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["sites"] = cfg.sites;
    j["colors"] = cfg.colors;
    if (cfg.command == "spectrum" || cfg.command == "orbits" || cfg.command == "phase") {
        j["boundary"] = cfg.periodic ? "periodic" : cfg.boundary;
        if (!cfg.periodic && cfg.boundary == "open") {
            j["alpha"] = cfg.alpha;
            j["beta"] = cfg.beta;
        }
    }
    if (cfg.command == "spectrum") j["form"] = cfg.form;
    if (cfg.command == "entropy") {
        j["cut"] = cfg.cut;
        j["mode"] = cfg.mode;
    }
    if (cfg.command == "mps") j["chi"] = cfg.chi;
    if (cfg.command == "state") {
        if (!cfg.class_id.empty()) j["class"] = cfg.class_id;
        if (cfg.anomalous) j["anomalous"] = true;
    }
    j["seed"] = cfg.seed;
    j["threads"] = cfg.threads;
    return j;
}

void write_csv_provenance(std::ostream& os, const RunConfig& cfg) {
    os << "# fredkin " << version << "\n# config:";
    json echo = config_echo(cfg);
    for (auto& [key, val] : echo.items())
        os << ' ' << key << '=' << (val.is_string() ? val.get<std::string>() : val.dump());
    os << '\n';
}

struct OutputSink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

int cmd_spectrum(const RunConfig& cfg) {
    BoundarySpec boundary = parse_boundary(cfg);
    ModelForm form = parse_form(cfg.form);
    if (cfg.colors > 1 && boundary.is_periodic())
        throw CLI::ValidationError("--colors",
                                   "the colored chain is defined with open boundary");
    LinearOperator h = (cfg.colors == 1)
                           ? build_hamiltonian(cfg.sites, boundary, form)
                           : build_colored_hamiltonian(cfg.sites, cfg.colors);
    std::vector<double> eigenvalues;
    std::vector<double> residuals;
    if (h.dim() <= dense_cap) {
        SpectralResult r = dense_spectrum(h, false);
        eigenvalues = r.eigenvalues;
        residuals.assign(eigenvalues.size(), 0.0);
    } else if (cfg.colors == 1 && !boundary.is_periodic()) {
        eigenvalues = sector_eigenvalues(h, down_count_labels(cfg.sites));
        residuals.assign(eigenvalues.size(), 0.0);
    } else {
        SpectralResult r = lanczos_lowest(h, cfg.count, 1e-10, 0, cfg.seed);
        eigenvalues = r.eigenvalues;
        residuals = r.residual_norms;
    }
    double gap = gap_from_eigenvalues(eigenvalues);
    std::int64_t degeneracy = 0;
    for (double e : eigenvalues)
        if (e <= eigenvalues.front() + cluster_tol) ++degeneracy;
    std::size_t emit = std::min<std::size_t>(eigenvalues.size(),
                                             static_cast<std::size_t>(cfg.count));
    OutputSink sink(cfg.out_path);
    if (cfg.format == "json") {
        json j;
        j["provenance"] = {{"version", version}, {"config", config_echo(cfg)}};
        j["n"] = cfg.sites;
        j["boundary"] = cfg.periodic ? "periodic" : cfg.boundary;
        j["eigenvalues"] = std::vector<double>(eigenvalues.begin(),
                                               eigenvalues.begin() + emit);
        j["gap"] = gap;
        j["residuals"] =
            std::vector<double>(residuals.begin(), residuals.begin() + emit);
        j["degeneracy"] = degeneracy;
        sink.stream() << j.dump(2) << '\n';
    } else {
        write_csv_provenance(sink.stream(), cfg);
        sink.stream() << "# gap=" << fmt(gap) << " degeneracy=" << degeneracy << '\n'
                      << "index,eigenvalue,residual\n";
        for (std::size_t i = 0; i < emit; ++i)
            sink.stream() << i << ',' << fmt(eigenvalues[i]) << ',' << fmt(residuals[i])
                          << '\n';
    }
    return 0;
}

int cmd_entropy(const RunConfig& cfg) {
    if (cfg.sites % 2 != 0)
        throw CLI::ValidationError("--sites", "entropy needs an even chain");
    int n = cfg.sites / 2;
    std::vector<int> cuts;
    if (cfg.cut > 0)
        cuts.push_back(cfg.cut);
    else
        for (int l = 1; l < cfg.sites; ++l) cuts.push_back(l);
    std::vector<SweepRow> rows;
    for (int l : cuts) {
        SweepRow row;
        if (cfg.mode == "svd") {
            Vector state = (cfg.colors == 1) ? dyck_state(n)
                                             : colored_dyck_state(n, cfg.colors);
            std::vector<double> p = schmidt_svd(state, cfg.sites, l, cfg.colors);
            row.N = cfg.sites;
            row.L = l;
            row.k = cfg.colors;
            row.s_exact = entropy_from_probabilities(p);
            row.s_asymptotic = (cfg.colors == 1)
                                   ? asymptotic_entropy(cfg.sites, l)
                                   : colored_entropy_asymptotic(cfg.sites, l, cfg.colors);
            std::int64_t rank = 0;
            for (double x : p)
                if (x > 1e-12) ++rank;
            row.rank = static_cast<double>(rank);
            row.height = height_expectation(n, l);
        } else if (cfg.mode == "formula") {
            row = entropy_point(cfg.sites, l, cfg.colors);
        } else if (cfg.mode == "asymptotic") {
            row.N = cfg.sites;
            row.L = l;
            row.k = cfg.colors;
            row.s_asymptotic = (cfg.colors == 1)
                                   ? asymptotic_entropy(cfg.sites, l)
                                   : colored_entropy_asymptotic(cfg.sites, l, cfg.colors);
            row.s_exact = row.s_asymptotic;  // this mode reports the estimate
            SchmidtSpectrum s = schmidt_colored(n, l, cfg.colors);
            row.rank = schmidt_rank(s);
            row.height = height_expectation(n, l);
        } else {
            throw CLI::ValidationError("--mode", "unknown mode: " + cfg.mode);
        }
        rows.push_back(row);
    }
    OutputSink sink(cfg.out_path);
    if (cfg.format == "json") {
        json j;
        j["provenance"] = {{"version", version}, {"config", config_echo(cfg)}};
        j["rows"] = json::array();
        for (const SweepRow& r : rows)
            j["rows"].push_back({{"N", r.N},
                                 {"L", r.L},
                                 {"k", r.k},
                                 {"S_exact", r.s_exact},
                                 {"S_asymptotic", r.s_asymptotic},
                                 {"rank", r.rank},
                                 {"height_expectation", r.height}});
        sink.stream() << j.dump(2) << '\n';
    } else {
        write_csv_provenance(sink.stream(), cfg);
        write_sweep_csv(sink.stream(), rows);
    }
    return 0;
}

int cmd_orbits(const RunConfig& cfg) {
    bool periodic = cfg.periodic || cfg.boundary == "periodic";
    OrbitPartition part = orbit_partition(cfg.sites, periodic, cfg.colors);
    OutputSink sink(cfg.out_path);
    write_csv_provenance(sink.stream(), cfg);
    sink.stream() << "# orbit_count=" << part.orbit_count() << '\n';
    if (cfg.verify) {
        OrbitTheoremReport report = verify_orbit_theorem(cfg.sites, periodic, cfg.colors);
        sink.stream() << "# verified: kernel_dim=" << report.kernel_dim
                      << " orbit_count=" << report.orbit_count
                      << " max_residual=" << fmt(report.max_residual, 3) << '\n';
    }
    dump_orbits(sink.stream(), part);
    return 0;
}

int cmd_mps(const RunConfig& cfg) {
    TruncationReport report = mps_truncation_report(cfg.sites, cfg.chi);
    OutputSink sink(cfg.out_path);
    write_csv_provenance(sink.stream(), cfg);
    sink.stream() << "chi,exact_chi,max_abs_error,lost_words\n"
                  << report.chi << ',' << exact_bond_dimension(cfg.sites) << ','
                  << fmt(report.max_abs_error, 17) << ',' << report.lost_words << '\n';
    if (cfg.verify && report.chi >= exact_bond_dimension(cfg.sites) &&
        (report.max_abs_error != 0.0 || report.lost_words != 0))
        throw MismatchDetected("mps: exact bond dimension failed the indicator check");
    return 0;
}

int cmd_magnon(const RunConfig& cfg) {
    MagnonSector sector = magnon_sector(cfg.sites);
    LinearOperator restricted = magnon_restricted_hamiltonian(cfg.sites);
    LinearOperator xxx = xxx_one_magnon(cfg.sites - 1);
    SpectralResult a = dense_spectrum(restricted, false);
    SpectralResult b = dense_spectrum(xxx, false);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
        worst = std::max(worst,
                         std::abs(a.eigenvalues[i] - magnon_xxx_scale * b.eigenvalues[i]));
    OutputSink sink(cfg.out_path);
    write_csv_provenance(sink.stream(), cfg);
    sink.stream() << "# sector_class=(" << sector.family.a << ',' << sector.family.b
                  << ") lambda=" << fmt(magnon_xxx_scale, 3)
                  << " closure_residual=" << fmt(magnon_closure_residual(cfg.sites), 3)
                  << " max_spectrum_diff=" << fmt(worst, 3) << '\n'
                  << "index,fredkin_eigenvalue,scaled_xxx_eigenvalue\n";
    for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
        sink.stream() << i << ',' << fmt(a.eigenvalues[i], 17) << ','
                      << fmt(magnon_xxx_scale * b.eigenvalues[i], 17) << '\n';
    if (cfg.verify && worst > 1e-9)
        throw MismatchDetected("magnon: spectra differ by " + std::to_string(worst));
    return 0;
}

int cmd_phase(const RunConfig& cfg) {
    PhaseDiagram diagram = phase_diagram(cfg.sites);
    OutputSink sink(cfg.out_path);
    write_csv_provenance(sink.stream(), cfg);
    sink.stream() << "sign_alpha,sign_beta,degeneracy,magnitude_invariant,identification,"
                     "fidelity\n";
    for (const QuadrantReport& q : diagram.quadrants)
        sink.stream() << q.sign_alpha << ',' << q.sign_beta << ',' << q.degeneracy << ','
                      << (q.magnitude_invariant ? 1 : 0) << ",\"" << q.identification
                      << "\"," << fmt(q.fidelity) << '\n';
    if (cfg.verify)
        for (const QuadrantReport& q : diagram.quadrants) {
            if (!q.magnitude_invariant)
                throw MismatchDetected("phase: degeneracy not magnitude invariant");
            if (q.fidelity < 1.0 - 1e-10)
                throw MismatchDetected("phase: ground space identification failed");
        }
    return 0;
}

int cmd_state(const RunConfig& cfg) {
    Vector v;
    if (cfg.anomalous) {
        if (cfg.sites % 2 != 0)
            throw CLI::ValidationError("--sites", "anomalous state needs even N");
        v = anomalous_state(cfg.sites / 2);
    } else if (!cfg.class_id.empty()) {
        int a = 0, b = 0;
        if (std::sscanf(cfg.class_id.c_str(), "%d,%d", &a, &b) != 2)
            throw CLI::ValidationError("--class", "expected 'a,b'");
        v = class_state(ClassId{a, b}, cfg.sites);
    } else {
        if (cfg.sites % 2 != 0)
            throw CLI::ValidationError("--sites", "the Dyck state needs even N");
        v = (cfg.colors == 1) ? dyck_state(cfg.sites / 2)
                              : colored_dyck_state(cfg.sites / 2, cfg.colors);
    }
    OutputSink sink(cfg.out_path);
    write_csv_provenance(sink.stream(), cfg);
    dump_state(sink.stream(), v, cfg.sites, cfg.anomalous || !cfg.class_id.empty()
                                                ? 1
                                                : cfg.colors);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Exact computations for the Fredkin spin chain and its colored variant"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, const char* default_format) {
        sub->add_option("--sites", cfg.sites, "chain length N")->required();
        sub->add_option("--colors", cfg.colors, "color count k")->check(CLI::Range(1, 8));
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
        sub->add_option("--seed", cfg.seed, "iterative solver seed");
        sub->add_option("--threads", cfg.threads, "worker threads")
            ->check(CLI::Range(1, 64));
        sub->parse_complete_callback([&cfg, default_format] {
            if (cfg.format.empty()) cfg.format = default_format;
        });
    };
    auto add_boundary = [&](CLI::App* sub) {
        sub->add_option("--boundary", cfg.boundary, "open or periodic")
            ->check(CLI::IsMember({"open", "periodic"}));
        sub->add_flag("--periodic", cfg.periodic, "shorthand for --boundary periodic");
        sub->add_option("--alpha", cfg.alpha, "left boundary coupling");
        sub->add_option("--beta", cfg.beta, "right boundary coupling");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues, degeneracy, gap");
    add_common(spectrum, "json");
    add_boundary(spectrum);
    spectrum->add_option("--form", cfg.form, "bulk form")
        ->check(CLI::IsMember({"projector", "pauli", "gate"}));
    spectrum->add_option("--count", cfg.count, "eigenvalues to emit")
        ->check(CLI::Range(1, 1 << 20));

    CLI::App* entropy_cmd = app.add_subcommand("entropy", "Schmidt spectrum entropies");
    add_common(entropy_cmd, "csv");
    entropy_cmd->add_option("--cut", cfg.cut, "cut after this many sites (default: sweep)");
    entropy_cmd->add_option("--mode", cfg.mode, "svd, formula, or asymptotic")
        ->check(CLI::IsMember({"svd", "formula", "asymptotic"}));

    CLI::App* orbits_cmd = app.add_subcommand("orbits", "Fredkin-move orbit census");
    add_common(orbits_cmd, "csv");
    add_boundary(orbits_cmd);
    orbits_cmd->add_flag("--verify", cfg.verify, "check orbit count = bulk kernel dim");

    CLI::App* mps_cmd = app.add_subcommand("mps", "MPS truncation report");
    add_common(mps_cmd, "csv");
    mps_cmd->add_option("--chi", cfg.chi, "bond dimension (default: exact N/2+1)");
    mps_cmd->add_flag("--verify", cfg.verify, "fail unless the exact indicator holds");

    CLI::App* magnon_cmd = app.add_subcommand("magnon", "one-magnon sector comparison");
    add_common(magnon_cmd, "csv");
    magnon_cmd->add_flag("--verify", cfg.verify, "fail unless spectra match to 1e-9");

    CLI::App* phase_cmd = app.add_subcommand("phase", "boundary-sign phase diagram");
    add_common(phase_cmd, "csv");
    phase_cmd->add_flag("--verify", cfg.verify, "fail on unidentified ground spaces");

    CLI::App* state_cmd = app.add_subcommand("state", "dump an exact state");
    add_common(state_cmd, "csv");
    state_cmd->add_option("--class", cfg.class_id, "class state 'a,b'");
    state_cmd->add_flag("--anomalous", cfg.anomalous, "the extra periodic state");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help/version exit 0, config errors exit 2
    }

    Eigen::setNbThreads(cfg.threads);
    try {
        if (spectrum->parsed()) {
            cfg.command = "spectrum";
            if (cfg.sites < 2) throw SiteOutOfRange("spectrum: need at least 2 sites");
            return cmd_spectrum(cfg);
        }
        if (entropy_cmd->parsed()) {
            cfg.command = "entropy";
            if (cfg.sites < 2) throw SiteOutOfRange("entropy: need at least 2 sites");
            if (cfg.cut < 0 || cfg.cut >= cfg.sites)
                throw CutOutOfRange("entropy: need 1 <= cut < sites");
            return cmd_entropy(cfg);
        }
        if (orbits_cmd->parsed()) {
            cfg.command = "orbits";
            if (cfg.sites < 2) throw SiteOutOfRange("orbits: need at least 2 sites");
            return cmd_orbits(cfg);
        }
        if (mps_cmd->parsed()) {
            cfg.command = "mps";
            if (cfg.sites < 2 || cfg.sites % 2 != 0)
                throw SiteOutOfRange("mps: need even N >= 2");
            return cmd_mps(cfg);
        }
        if (magnon_cmd->parsed()) {
            cfg.command = "magnon";
            if (cfg.sites < 3) throw SiteOutOfRange("magnon: need at least 3 sites");
            return cmd_magnon(cfg);
        }
        if (phase_cmd->parsed()) {
            cfg.command = "phase";
            return cmd_phase(cfg);
        }
        if (state_cmd->parsed()) {
            cfg.command = "state";
            if (cfg.sites < 1) throw SiteOutOfRange("state: need at least 1 site");
            return cmd_state(cfg);
        }
    } catch (const SiteOutOfRange& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const CutOutOfRange& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const EmptyClass& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const ConvergenceFailure& e) {
        std::cerr << "convergence failure: " << e.what() << '\n';
        return 3;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 4;
    } catch (const MismatchDetected& e) {
        std::cerr << "verification mismatch: " << e.what() << '\n';
        return 5;
    }
    return 2;
}
