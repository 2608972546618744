#include "cli_support.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

namespace cluster_cli {

namespace {

struct StateDeleter {
    void operator()(cs_state *s) const { cs_state_free(s); }
};
using StateHandle = std::unique_ptr<cs_state, StateDeleter>;

struct InternalError {
    std::string message;
};

void check(cs_status status, const std::string &what) {
    if (status != CS_OK)
        throw InternalError{what + ": " + cs_status_name(status)};
}

void validate_probability_list(const std::vector<double> &values, const std::string &field,
                               bool exclusive_zero) {
    if (values.empty())
        throw ConfigError{field + ": sweep grid must be nonempty"};
    for (double v : values) {
        if (exclusive_zero ? !(v > 0.0 && v <= 1.0) : !(v >= 0.0 && v <= 1.0))
            throw ConfigError{field + ": value " + format_number(v) +
                              (exclusive_zero ? " outside (0,1]" : " outside [0,1]")};
    }
}

} // namespace

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

RunConfig parse_config(int argc, const char *const *argv) {
    RunConfig config;
    CLI::App app{"cluster chain simulator"};
    app.set_config("--config", "", "flat key=value config file (flags override)");

    std::string mode_str, policy_str = "RETRY_GATE", format_str = "csv";
    app.add_option("--mode", mode_str, "verify or sweep");
    app.add_option("--n", config.n_sites, "number of chain sites (>= 2)");
    app.add_option("--p-erase", config.p_erase, "erasure probabilities, comma separated")
        ->delimiter(',');
    app.add_option("--p-dephase", config.p_dephase, "dephasing probabilities, comma separated")
        ->delimiter(',');
    app.add_option("--p-cnot", config.p_cnot, "CNOT success probabilities, comma separated")
        ->delimiter(',');
    app.add_option("--policy", policy_str, "RETRY_GATE or RESTART_ALL");
    app.add_option("--trials", config.trials, "Monte Carlo trials per grid point");
    auto *seed_opt = app.add_option("--seed", config.seed, "base RNG seed")
                         ->envname("CLUSTER_SIM_SEED");
    app.add_option("--out", config.out_path, "output file (default: stdout)");
    app.add_option("--format", format_str, "csv or json");
    app.add_option("--svg", config.svg_path, "write a fidelity sweep plot to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        throw ConfigError{e.what()};
    }
    (void)seed_opt;

    if (config.n_sites < 2)
        throw ConfigError{"n_sites: protocol needs n >= 2, got " +
                          std::to_string(config.n_sites)};
    if (mode_str == "verify")
        config.mode = Mode::Verify;
    else if (mode_str == "sweep")
        config.mode = Mode::Sweep;
    else
        throw ConfigError{"mode: expected 'verify' or 'sweep', got '" + mode_str + "'"};
    if (policy_str == "RETRY_GATE" || policy_str == "retry_gate")
        config.policy = CS_POLICY_RETRY_GATE;
    else if (policy_str == "RESTART_ALL" || policy_str == "restart_all")
        config.policy = CS_POLICY_RESTART_ALL;
    else
        throw ConfigError{"policy: expected RETRY_GATE or RESTART_ALL, got '" + policy_str +
                          "'"};
    if (format_str == "csv")
        config.format = OutputFormat::Csv;
    else if (format_str == "json")
        config.format = OutputFormat::Json;
    else
        throw ConfigError{"format: expected csv or json, got '" + format_str + "'"};
    if (config.trials < 1)
        throw ConfigError{"trials: must be >= 1, got " + std::to_string(config.trials)};
    validate_probability_list(config.p_erase, "p_erase", /*exclusive_zero=*/false);
    validate_probability_list(config.p_dephase, "p_dephase", /*exclusive_zero=*/false);
    validate_probability_list(config.p_cnot, "p_cnot", /*exclusive_zero=*/true);
    return config;
}

namespace {

struct CheckRow {
    std::string name;
    std::string detail;
    double deviation = 0.0;
    bool pass = false;
};

StateHandle protocol_state(int n) {
    cs_state *raw = nullptr;
    check(cs_run_protocol(n, &raw), "run_protocol");
    StateHandle state(raw);
    // Test hook: corrupt the output so the failure path is exercisable.
    const char *corrupt = std::getenv("CLUSTER_SIM_CORRUPT_GATE");
    if (corrupt && *corrupt) {
        const double a = 0.05;
        const double re[9] = {1, 0, 0, 0, std::cos(a), -std::sin(a), 0, std::sin(a),
                              std::cos(a)};
        check(cs_apply_site_matrix(state.get(), 1, re, nullptr, 1), "corrupt hook");
    }
    return state;
}

std::vector<CheckRow> verify_checks(const RunConfig &config) {
    const int n = config.n_sites;
    std::vector<CheckRow> rows;

    StateHandle run = protocol_state(n);
    cs_state *ref_raw = nullptr;
    check(cs_reference_cluster(n, &ref_raw), "reference_cluster");
    StateHandle ref(ref_raw);

    const long long dim = cs_state_dim(run.get());
    std::vector<double> run_re(dim), run_im(dim), ref_re(dim), ref_im(dim);
    check(cs_state_amplitudes(run.get(), run_re.data(), run_im.data()), "amplitudes");
    check(cs_state_amplitudes(ref.get(), ref_re.data(), ref_im.data()), "amplitudes");

    double amp_dev = 0.0;
    for (long long i = 0; i < dim; ++i)
        amp_dev = std::max(amp_dev, std::hypot(run_re[i] - ref_re[i], run_im[i] - ref_im[i]));
    rows.push_back({"oracle_equivalence", "n=" + std::to_string(n), amp_dev,
                    amp_dev < 1e-12});

    double stab_dev = 0.0;
    for (int site = 1; site <= n; ++site) {
        double e = 0.0;
        check(cs_stabilizer_expectation(run.get(), site, &e), "stabilizer");
        stab_dev = std::max(stab_dev, std::abs(std::abs(e) - 1.0));
    }
    rows.push_back({"stabilizer_magnitudes", "sites 1.." + std::to_string(n), stab_dev,
                    stab_dev < 1e-12});

    const double expected_mag = std::pow(2.0, -0.5 * n);
    double uni_dev = 0.0;
    long long nonzero = 0;
    for (long long i = 0; i < dim; ++i) {
        double mag = std::hypot(run_re[i], run_im[i]);
        if (mag > 1e-12) {
            ++nonzero;
            uni_dev = std::max(uni_dev, std::abs(mag - expected_mag));
        }
    }
    bool uni_ok = uni_dev < 1e-12 && nonzero == (1LL << n);
    rows.push_back({"amplitude_uniformity",
                    std::to_string(nonzero) + " nonzero amplitudes", uni_dev, uni_ok});

    double vac_dev = 0.0;
    for (int site = 1; site <= n; ++site) {
        double pop = 0.0;
        check(cs_state_site_population(run.get(), site, CS_LEVEL_VAC, &pop), "population");
        vac_dev = std::max(vac_dev, pop);
    }
    rows.push_back({"vac_population", "sites 1.." + std::to_string(n), vac_dev,
                    vac_dev == 0.0});

    if (n >= 3) {
        int ok = 0;
        check(cs_bell_extraction_check(n, &ok), "bell_extraction");
        long long branches = 1LL << (n - 2);
        rows.push_back({"bell_extraction", std::to_string(branches) + " branches",
                        ok ? 0.0 : 1.0, ok != 0});
    }
    return rows;
}

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw IoError{"cannot open output path '" + out_path + "'"};
    out << text;
    if (!out)
        throw IoError{"write failed for '" + out_path + "'"};
}

struct SweepRow {
    double p_erase, p_dephase, p_cnot;
    cs_trial_report report;
};

std::string policy_name(cs_policy policy) {
    return policy == CS_POLICY_RETRY_GATE ? "RETRY_GATE" : "RESTART_ALL";
}

std::string sweep_csv(const RunConfig &config, const std::vector<SweepRow> &rows) {
    std::ostringstream out;
    out << "n,p_erase,p_dephase,p_cnot,policy,trials,seed,mean_fidelity,"
           "stderr_fidelity,mean_attempts\n";
    for (const SweepRow &r : rows) {
        out << config.n_sites << ',' << format_number(r.p_erase) << ','
            << format_number(r.p_dephase) << ',' << format_number(r.p_cnot) << ','
            << policy_name(config.policy) << ',' << config.trials << ',' << config.seed << ','
            << format_number(r.report.mean_fidelity) << ','
            << format_number(r.report.stderr_fidelity) << ','
            << format_number(r.report.mean_attempts) << '\n';
    }
    return out.str();
}

std::string sweep_json(const RunConfig &config, const std::vector<SweepRow> &rows) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow &r = rows[i];
        out << "  {\"n\": " << config.n_sites << ", \"p_erase\": " << format_number(r.p_erase)
            << ", \"p_dephase\": " << format_number(r.p_dephase)
            << ", \"p_cnot\": " << format_number(r.p_cnot) << ", \"policy\": \""
            << policy_name(config.policy) << "\", \"trials\": " << config.trials
            << ", \"seed\": " << config.seed
            << ", \"mean_fidelity\": " << format_number(r.report.mean_fidelity)
            << ", \"stderr_fidelity\": " << format_number(r.report.stderr_fidelity)
            << ", \"mean_attempts\": " << format_number(r.report.mean_attempts) << "}"
            << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    out << "]\n";
    return out.str();
}

// Minimal self-contained polyline plot: mean fidelity against the swept
// parameter (the first grid axis with more than one value), one polyline per
// combination of the remaining axes.
std::string sweep_svg(const RunConfig &config, const std::vector<SweepRow> &rows) {
    enum Axis { Erase, Dephase, Cnot } axis = Erase;
    std::string axis_label = "p_erase";
    if (config.p_erase.size() > 1) {
        axis = Erase;
    } else if (config.p_dephase.size() > 1) {
        axis = Dephase;
        axis_label = "p_dephase";
    } else if (config.p_cnot.size() > 1) {
        axis = Cnot;
        axis_label = "p_cnot";
    }
    auto x_of = [&](const SweepRow &r) {
        return axis == Erase ? r.p_erase : (axis == Dephase ? r.p_dephase : r.p_cnot);
    };
    auto group_of = [&](const SweepRow &r) {
        std::ostringstream key;
        if (axis != Erase)
            key << "p_erase=" << format_number(r.p_erase) << ' ';
        if (axis != Dephase)
            key << "p_dephase=" << format_number(r.p_dephase) << ' ';
        if (axis != Cnot)
            key << "p_cnot=" << format_number(r.p_cnot);
        return key.str();
    };

    double xmin = x_of(rows.front()), xmax = xmin;
    for (const SweepRow &r : rows) {
        xmin = std::min(xmin, x_of(r));
        xmax = std::max(xmax, x_of(r));
    }
    if (xmax == xmin)
        xmax = xmin + 1.0;

    const double w = 640, h = 480, ml = 60, mr = 20, mt = 20, mb = 50;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto py = [&](double y) { return h - mb - y * (h - mt - mb); };

    std::map<std::string, std::vector<const SweepRow *>> groups;
    for (const SweepRow &r : rows)
        groups[group_of(r)].push_back(&r);

    static const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b"};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    svg << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << py(0) << "\" x2=\"" << w - mr << "\" y2=\""
        << py(0) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << py(0) << "\" x2=\"" << ml << "\" y2=\""
        << py(1) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 12
        << "\" text-anchor=\"middle\" font-size=\"14\">" << axis_label << "</text>\n";
    svg << "<text x=\"18\" y=\"" << (py(0) + py(1)) / 2
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 "
        << (py(0) + py(1)) / 2 << ")\">mean_fidelity</text>\n";
    for (double y : {0.0, 0.5, 1.0})
        svg << "<text x=\"" << ml - 8 << "\" y=\"" << py(y) + 4
            << "\" text-anchor=\"end\" font-size=\"12\">" << format_number(y) << "</text>\n";
    for (double x : {xmin, xmax})
        svg << "<text x=\"" << px(x) << "\" y=\"" << py(0) + 18
            << "\" text-anchor=\"middle\" font-size=\"12\">" << format_number(x)
            << "</text>\n";

    int color = 0;
    double legend_y = mt + 10;
    for (auto &[key, members] : groups) {
        const char *stroke = palette[color % 6];
        svg << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\" points=\"";
        for (const SweepRow *r : members)
            svg << px(x_of(*r)) << ',' << py(r->report.mean_fidelity) << ' ';
        svg << "\"/>\n";
        if (!key.empty()) {
            svg << "<text x=\"" << ml + 10 << "\" y=\"" << legend_y
                << "\" font-size=\"11\" fill=\"" << stroke << "\">" << key << "</text>\n";
            legend_y += 14;
        }
        ++color;
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace

int run_verify(const RunConfig &config) {
    std::vector<CheckRow> rows = verify_checks(config);
    std::ostringstream out;
    bool all_pass = true;
    for (const CheckRow &r : rows) {
        out << r.name << ',' << r.detail << ',' << format_number(r.deviation) << ','
            << (r.pass ? "PASS" : "FAIL") << '\n';
        all_pass = all_pass && r.pass;
    }
    emit(out.str(), config.out_path);
    return all_pass ? kExitOk : kExitVerifyFail;
}

int run_sweep(const RunConfig &config) {
    cs_noise_params params{};
    params.policy = config.policy;
    std::vector<SweepRow> rows;
    // Grid iteration order is part of the output contract: p_erase
    // outermost, p_cnot innermost.
    for (double pe : config.p_erase) {
        for (double pd : config.p_dephase) {
            for (double pc : config.p_cnot) {
                params.p_erase = pe;
                params.p_dephase = pd;
                params.p_cnot = pc;
                cs_trial_report report{};
                check(cs_run_experiment(config.n_sites, &params, config.trials, config.seed,
                                        &report, nullptr),
                      "run_experiment");
                rows.push_back({pe, pd, pc, report});
            }
        }
    }
    emit(config.format == OutputFormat::Csv ? sweep_csv(config, rows)
                                            : sweep_json(config, rows),
         config.out_path);
    if (!config.svg_path.empty()) {
        std::ofstream svg(config.svg_path, std::ios::binary);
        if (!svg)
            throw IoError{"cannot open svg path '" + config.svg_path + "'"};
        svg << sweep_svg(config, rows);
        if (!svg)
            throw IoError{"write failed for '" + config.svg_path + "'"};
    }
    return kExitOk;
}

int run_main(int argc, const char *const *argv) {
    try {
        RunConfig config = parse_config(argc, argv);
        return config.mode == Mode::Verify ? run_verify(config) : run_sweep(config);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.message << '\n';
        return kExitConfig;
    } catch (const IoError &e) {
        std::cerr << "io error: " << e.message << '\n';
        return kExitIo;
    } catch (const InternalError &e) {
        std::cerr << "internal error: " << e.message << '\n';
        return kExitInternal;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace cluster_cli
