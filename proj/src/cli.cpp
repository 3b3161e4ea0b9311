#include "qdm/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdm/coherence.hpp"
#include "qdm/discord.hpp"
#include "qdm/dqc1.hpp"
#include "qdm/entanglement.hpp"
#include "qdm/state_io.hpp"
#include "qdm/states.hpp"

namespace qdm {

namespace {

using nlohmann::json;

std::vector<int> parse_cut(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty cut specification");
    return out;
}

// Shared state-selection flags: a named family or a state-file path.
struct StateFlags {
    std::string state = "werner";
    int n = 2;
    double epsilon = 1e-5;  // default NMR-scale polarization
    int bell_index = 0;
    double beta = 1e-5;
    bool plus_sign = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--state", state,
                        "State family (werner|bell|cat|pseudo-pure-cat|deviation|"
                        "thermal|maxmixed) or a state-file path");
        cmd->add_option("--n", n, "Qubit count for families that take one");
        cmd->add_option("--epsilon", epsilon,
                        "Polarization / mixing parameter (default 1e-5)");
        cmd->add_option("--bell-index", bell_index,
                        "Bell basis index 0..3 (Psi+, Phi+, Phi-, Psi-)");
        cmd->add_option("--beta", beta, "Inverse thermal energy (thermal family)");
        cmd->add_flag("--plus-sign", plus_sign,
                      "Use the 1 + eps sigma_z^1 deviation sign");
    }
};

// Diagonal Zeeman-like demo Hamiltonian with spread chemical shifts.
ThermalSpec demo_thermal_spec(int n, double beta) {
    const Eigen::Index d = dim_for(n);
    Mat h = Mat::Zero(d, d);
    for (int q = 0; q < n; ++q) {
        const double omega = 1.0 + 0.1 * q;
        h += omega * 0.5 * embed(pauli_z().m, q, n);
    }
    return ThermalSpec{std::move(h), beta, n};
}

DensityMatrix make_state(const StateFlags& f) {
    if (f.state == "werner") return werner(f.epsilon);
    if (f.state == "bell") {
        const Vec psi = bell_state(f.bell_index);
        return DensityMatrix(2, psi * psi.adjoint());
    }
    if (f.state == "cat") {
        const Vec psi = cat_state(f.n);
        return DensityMatrix(f.n, psi * psi.adjoint());
    }
    if (f.state == "pseudo-pure-cat")
        return pseudo_pure(f.n, f.epsilon, cat_state(f.n));
    if (f.state == "deviation") return deviation_state(f.n, f.epsilon, f.plus_sign);
    if (f.state == "thermal") return thermal_state(demo_thermal_spec(f.n, f.beta));
    if (f.state == "maxmixed") {
        const Eigen::Index d = dim_for(f.n);
        return DensityMatrix(f.n, Mat::Identity(d, d) / static_cast<double>(d));
    }
    if (f.state.ends_with(".json")) return load_state(f.state);
    throw std::invalid_argument("unknown state family: " + f.state);
}

json state_metadata(const StateFlags& f) {
    json meta{{"family", f.state}};
    if (f.state == "werner" || f.state == "pseudo-pure-cat" ||
        f.state == "deviation")
        meta["epsilon"] = f.epsilon;
    if (f.state != "werner" && f.state != "bell") meta["n"] = f.n;
    if (f.state == "bell") meta["bell_index"] = f.bell_index;
    if (f.state == "thermal") {
        meta["beta"] = f.beta;
        meta["hamiltonian"] = "diagonal Zeeman, omega_q = 1 + 0.1 q";
    }
    return meta;
}

// CSV rendering: scalar fields as key,value rows; array fields as a
// titled table afterwards.
void write_csv(const json& j, std::ostream& out) {
    for (const auto& [key, val] : j.items()) {
        if (val.is_array() || val.is_object()) continue;
        out << key << "," << val.dump() << "\n";
    }
    for (const auto& [key, val] : j.items()) {
        if (val.is_object()) {
            for (const auto& [k2, v2] : val.items())
                if (!v2.is_structured())
                    out << key << "." << k2 << "," << v2.dump() << "\n";
        }
    }
    for (const auto& [key, val] : j.items()) {
        if (!val.is_array()) continue;
        out << "\n";
        if (!val.empty() && val.front().is_object()) {
            bool first = true;
            for (const auto& [k2, v2] : val.front().items()) {
                (void)v2;
                out << (first ? "" : ",") << k2;
                first = false;
            }
            out << "\n";
            for (const auto& row : val) {
                first = true;
                for (const auto& [k2, v2] : row.items()) {
                    (void)k2;
                    out << (first ? "" : ",") << v2.dump();
                    first = false;
                }
                out << "\n";
            }
        } else {
            out << "index," << key << "\n";
            for (std::size_t i = 0; i < val.size(); ++i)
                out << i << "," << val[i].dump() << "\n";
        }
    }
}

void emit(const json& j, const std::string& format, std::ostream& out) {
    if (format == "csv")
        write_csv(j, out);
    else
        out << j.dump(2) << "\n";
}

std::string resolve_out_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::path(path).is_absolute()) return path;
    if (const char* dir = std::getenv("QDM_OUTPUT_DIR"))
        return (fs::path(dir) / path).string();
    return path;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Dense density-matrix toolkit for mixed-state quantum "
                 "information: state families, separability analysis, "
                 "discord, one-clean-qubit trace estimation, and "
                 "multiple-quantum coherence"};
    app.require_subcommand(1);

    std::string format = "json";
    int cap = dense_qubit_cap();
    app.add_option("--format", format, "Output format: json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cap", cap, "Dense-size cap in qubits (default 12)");

    json result;

    // ---- state make ----
    auto* state_cmd = app.add_subcommand("state", "State construction and I/O");
    auto* make_cmd = state_cmd->add_subcommand("make", "Construct a state");
    StateFlags make_flags;
    make_flags.attach(make_cmd);
    std::string out_path;
    make_cmd->add_option("--out", out_path,
                         "Write the state file here (relative paths resolve "
                         "against $QDM_OUTPUT_DIR); otherwise print to stdout");
    make_cmd->callback([&] {
        const DensityMatrix rho = make_state(make_flags);
        const json doc = state_to_json(rho, state_metadata(make_flags));
        if (out_path.empty()) {
            result = doc;
        } else {
            const std::string path = resolve_out_path(out_path);
            save_state(path, rho, state_metadata(make_flags));
            result = json{{"written", path}, {"n_qubits", rho.n_qubits()}};
        }
    });

    // ---- entangle ----
    auto* ent_cmd = app.add_subcommand("entangle", "Entanglement analysis");

    auto* ppt_cmd = ent_cmd->add_subcommand("ppt", "Partial-transpose report");
    StateFlags ppt_flags;
    ppt_flags.attach(ppt_cmd);
    std::string ppt_cut = "0";
    ppt_cmd->add_option("--cut", ppt_cut, "Side-A qubit indices, comma separated");
    ppt_cmd->callback([&] {
        const DensityMatrix rho = make_state(ppt_flags);
        const Bipartition cut(parse_cut(ppt_cut), rho.n_qubits());
        const PptReport r = ppt_check(rho, cut);
        result = json{{"min_eigenvalue", r.min_eigenvalue},
                      {"is_ppt", r.is_ppt},
                      {"negativity", r.negativity},
                      {"conclusive", r.conclusive},
                      {"cut_a", r.cut.side_a}};
    });

    auto* thr_cmd = ent_cmd->add_subcommand(
        "threshold", "Bisect the PPT/NPT boundary of a family");
    std::string thr_family = "werner";
    double thr_tol = 1e-9;
    int thr_n = 3, thr_n_min = 0, thr_n_max = 0;
    thr_cmd->add_option("--family", thr_family, "werner or cat")
        ->check(CLI::IsMember({"werner", "cat"}));
    thr_cmd->add_option("--tol", thr_tol, "Bisection tolerance (default 1e-9)");
    thr_cmd->add_option("--n", thr_n, "Qubit count for the cat family");
    thr_cmd->add_option("--n-min", thr_n_min, "Table mode: first n");
    thr_cmd->add_option("--n-max", thr_n_max, "Table mode: last n");
    thr_cmd->callback([&] {
        if (thr_n_min > 0 && thr_n_max >= thr_n_min) {
            if (thr_family != "cat")
                throw std::invalid_argument("table mode requires --family cat");
            json table = json::array();
            for (const auto& [n, eps] :
                 cat_threshold_table(thr_n_min, thr_n_max, thr_tol))
                table.push_back({{"n", n}, {"epsilon_c", eps}});
            result = json{{"family", thr_family}, {"tol", thr_tol}, {"table", table}};
        } else {
            const ParametrizedFamily fam =
                thr_family == "werner" ? werner_family() : cat_family(thr_n);
            result = json{{"family", fam.name},
                          {"tol", thr_tol},
                          {"epsilon_c", threshold_bisect(fam, thr_tol)}};
        }
    });

    auto* cross_cmd = ent_cmd->add_subcommand(
        "crossing", "Polarization vs separability-threshold crossing");
    double cross_eps2 = 1e-5;
    int cross_n_max = 20;
    std::string cross_curve = "separable-ball";
    cross_cmd->add_option("--eps2", cross_eps2,
                          "Calibrates the model so eps(2) = this value");
    cross_cmd->add_option("--n-max", cross_n_max, "Largest n to scan");
    cross_cmd->add_option("--curve", cross_curve,
                          "Threshold curve: separable-ball (default) or cat-ppt")
        ->check(CLI::IsMember({"separable-ball", "cat-ppt"}));
    cross_cmd->callback([&] {
        PolarizationModel model = default_polarization_model(cross_eps2);
        if (cross_curve == "cat-ppt")
            model.threshold_curve = [](int n) { return cat_ppt_threshold(n); };
        const CrossingReport r = crossing_analysis(model, cross_n_max);
        json curves = json::array();
        for (const auto& p : r.curves)
            curves.push_back({{"n", p.n},
                              {"eps", p.eps},
                              {"eps_c", p.eps_c},
                              {"extrapolated", p.extrapolated}});
        result = json{{"n_cross", r.n_cross ? json(*r.n_cross) : json(nullptr)},
                      {"curve", cross_curve},
                      {"curves", curves}};
    });

    // ---- discord ----
    auto* disc_cmd =
        app.add_subcommand("discord", "Mutual information, J, and discord");
    StateFlags disc_flags;
    disc_flags.state = "bell";
    disc_flags.attach(disc_cmd);
    std::string disc_cut = "0";
    GridSettings grid;
    disc_cmd->add_option("--cut", disc_cut, "Side-A (unmeasured) qubit indices");
    disc_cmd->add_option("--grid-theta", grid.n_theta, "Theta grid points (default 64)");
    disc_cmd->add_option("--grid-phi", grid.n_phi, "Phi grid points (default 128)");
    disc_cmd->add_option("--refine", grid.refine_iters,
                         "Refinement iterations (default 200)");
    disc_cmd->callback([&] {
        const DensityMatrix rho = make_state(disc_flags);
        const Bipartition cut(parse_cut(disc_cut), rho.n_qubits());
        const DiscordReport r = discord(rho, cut, grid);
        result = json{{"I", r.mutual_info},
                      {"J_at_basis", r.j_at_basis},
                      {"J_max", r.j_max},
                      {"basis", {{"theta", r.basis_argmax.theta},
                                 {"phi", r.basis_argmax.phi}}},
                      {"D_standard", r.d_standard},
                      {"D_paper_sign", r.d_paper_sign}};
    });

    // ---- dqc1 ----
    auto* dqc1_cmd = app.add_subcommand("dqc1", "One-clean-qubit trace estimation");
    std::string u_name = "identity";
    int dqc1_n = 3;
    double dqc1_eps = 1e-5;
    std::uint64_t dqc1_seed = 1;
    long long dqc1_shots = 10000;
    bool literal = false;
    auto add_u_flags = [&](CLI::App* cmd) {
        cmd->add_option("--u", u_name, "Unitary: identity, x, or random")
            ->check(CLI::IsMember({"identity", "x", "random"}));
        cmd->add_option("--n", dqc1_n, "Target register qubit count");
        cmd->add_option("--epsilon", dqc1_eps, "Clean-qubit polarization");
        cmd->add_option("--seed", dqc1_seed, "Seed for random unitaries / sampling");
    };
    auto make_u = [&] {
        const Eigen::Index d = dim_for(dqc1_n);
        if (u_name == "identity") return identity_op(d);
        if (u_name == "x") {
            Operator u = pauli_x();
            for (int k = 1; k < dqc1_n; ++k) u = tensor(u, identity_op(2));
            return u;
        }
        return random_unitary(d, dqc1_seed);
    };

    auto* exact_cmd = dqc1_cmd->add_subcommand("exact", "Exact Tr U / 2^n");
    add_u_flags(exact_cmd);
    exact_cmd->add_flag("--literal-readout", literal,
                        "Final-Hadamard-then-sigma_z circuit reading");
    exact_cmd->callback([&] {
        const auto v = dqc1_exact(make_u(), dqc1_eps, literal);
        result = json{{"re", v.real()}, {"im", v.imag()}};
    });

    auto* sample_cmd = dqc1_cmd->add_subcommand("sample", "Finite-shot estimate");
    add_u_flags(sample_cmd);
    sample_cmd->add_option("--shots", dqc1_shots, "Shots per quadrature");
    sample_cmd->callback([&] {
        const auto [re, im] = dqc1_sampled(make_u(), dqc1_eps, dqc1_shots, dqc1_seed);
        auto shot_json = [](const ShotResult& r) {
            return json{{"estimate", r.estimate},
                        {"std_err", r.std_err},
                        {"shots", r.shots},
                        {"seed", r.seed}};
        };
        result = json{{"re", shot_json(re)}, {"im", shot_json(im)}};
    });

    // ---- coherence ----
    auto* coh_cmd = app.add_subcommand("coherence", "Multiple-quantum coherence");

    auto* spec_cmd = coh_cmd->add_subcommand("spectrum", "Coherence-order weights");
    StateFlags spec_flags;
    spec_flags.state = "cat";
    spec_flags.attach(spec_cmd);
    spec_cmd->callback([&] {
        const CoherenceSpectrum s = coherence_spectrum(make_state(spec_flags));
        json weights = json::object();
        for (const auto& [p, w] : s.weights) weights[std::to_string(p)] = w;
        result = json{{"total", s.total}, {"weights", weights}};
    });

    auto* sig_cmd = coh_cmd->add_subcommand(
        "signal", "Gradient-label / time-reversal signal and its spectrum");
    int sig_n = 2;
    double sig_eps = 1e-5;
    int sig_samples = 64;
    sig_cmd->add_option("--n", sig_n, "Qubit count");
    sig_cmd->add_option("--epsilon", sig_eps, "Pseudo-pure polarization");
    sig_cmd->add_option("--samples", sig_samples,
                        "Phi samples over [0, 2pi); power of two (default 64)");
    sig_cmd->callback([&] {
        const MqSignal s = mq_signal(sig_n, sig_eps, sig_samples);
        result = json{{"n", sig_n},
                      {"peak_order", s.peak_order},
                      {"signal", s.signal},
                      {"spectrum", s.spectrum}};
    });

    // The cap must take effect before any subcommand callback constructs
    // a state; restore it afterwards so library callers are unaffected.
    struct CapGuard {
        int saved = dense_qubit_cap();
        ~CapGuard() { set_dense_qubit_cap(saved); }
    } cap_guard;
    app.callback([&] { set_dense_qubit_cap(cap); });
    app.immediate_callback();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    emit(result, format, out);
    return 0;
}

}  // namespace qdm
