#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "catphase/analytic.hpp"
#include "catphase/fock.hpp"
#include "catphase/interferometer.hpp"
#include "catphase/montecarlo.hpp"
#include "catphase/optimizer.hpp"
#include "catphase/output.hpp"

namespace {

namespace an = catphase::analytic;
namespace ifo = catphase::ifo;
namespace mc = catphase::mc;
namespace opt = catphase::opt;
namespace out = catphase::out;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kIo = 2;
constexpr int kNumerical = 3;

template <class Writer>
int with_output(const std::string& path, Writer writer) {
    if (path.empty() || path == "-") {
        writer(std::cout);
        std::cout.flush();
        return std::cout ? kOk : kIo;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "catphase: cannot open '" << path << "' for writing\n";
        return kIo;
    }
    writer(file);
    file.flush();
    if (!file) {
        std::cerr << "catphase: write to '" << path << "' failed\n";
        return kIo;
    }
    return kOk;
}

int emit_table(const out::Table& table, const std::string& path, const std::string& format,
               const std::string& title) {
    return with_output(path, [&](std::ostream& os) {
        if (format == "csv") {
            out::write_csv(os, table);
        } else if (format == "json") {
            out::write_json(os, table);
        } else {
            out::write_svg(os, table, title);
        }
    });
}

int emit_record(const ordered_json& record, const std::string& path,
                const std::string& format) {
    if (format == "svg") {
        throw std::invalid_argument("svg output applies to curve subcommands only");
    }
    return with_output(path, [&](std::ostream& os) {
        if (format == "json") {
            os << record.dump(2) << "\n";
            return;
        }
        bool first = true;
        for (const auto& item : record.items()) {
            os << (first ? "" : ",") << item.key();
            first = false;
        }
        os << "\n";
        first = true;
        for (const auto& item : record.items()) {
            os << (first ? "" : ",");
            const auto& v = item.value();
            if (v.is_number_float()) {
                os << out::format_double(v.get<double>());
            } else if (v.is_string()) {
                os << v.get<std::string>();
            } else {
                os << v.dump();
            }
            first = false;
        }
        os << "\n";
    });
}

// delta sweep of a per-alpha scalar; one value column per requested alpha.
out::Table curve_table(const std::vector<double>& alphas, const out::SweepSpec& sweep,
                       const std::string& single_name, const std::string& prefix,
                       double (*f)(const an::CatParams&)) {
    out::Table table;
    table.columns.push_back(sweep.parameter);
    if (alphas.size() == 1) {
        table.columns.push_back(single_name);
    } else {
        for (double alpha : alphas) {
            table.columns.push_back(out::alpha_column(prefix, alpha));
        }
    }
    for (double delta : sweep.grid()) {
        std::vector<double> row{delta};
        for (double alpha : alphas) {
            row.push_back(f(an::CatParams(alpha, delta)));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

struct CurveOpts {
    std::vector<double> alphas;
    double delta_min = 0.0;
    double delta_max = 3.0;
    int steps = 601;
    std::string out_path = "-";
    std::string format = "csv";
};

struct ErrorCurveOpts {
    double alpha_min = 1.5;
    double alpha_max = 3.5;
    int steps = 9;
    double tolerance = 1e-12;
    std::string out_path = "-";
    std::string format = "csv";
};

struct OptimizeOpts {
    double alpha = 1.5;
    double tolerance = 1e-12;
    std::string out_path = "-";
    std::string format = "json";
};

struct SimulateOpts {
    double alpha = 1.5;
    double delta = 0.0;
    bool auto_delta = false;
    bool delta_given = false;
    long long shots = 100000;
    std::uint64_t seed = 0;
    double tolerance = 1e-12;
    std::string out_path = "-";
    std::string format = "json";
};

struct IfoOpts {
    std::string topology = "antisym";
    double reflectivity = 1.0 / std::numbers::sqrt2;
    double transmissivity = 1.0 / std::numbers::sqrt2;
    double carrier_amplitude = 1.0;
    double n_carrier = 0.0;
    bool n_carrier_given = false;
    double phi = 1e-3;
    double phi1 = 0.0;
    bool phi1_given = false;
    double phi2 = 0.0;
    std::string out_path = "-";
    std::string format = "json";
};

int run_overlap_curve(const CurveOpts& o) {
    const out::SweepSpec sweep{"delta", o.delta_min, o.delta_max, o.steps};
    return emit_table(curve_table(o.alphas, sweep, "overlap", "overlap", an::overlap),
                      o.out_path, o.format, "Overlap of initial and displaced cat states");
}

int run_parity_curve(const CurveOpts& o) {
    const out::SweepSpec sweep{"delta", o.delta_min, o.delta_max, o.steps};
    return emit_table(curve_table(o.alphas, sweep, "parity", "parity", an::parity),
                      o.out_path, o.format, "Parity of the displaced cat state");
}

int run_error_curve(const ErrorCurveOpts& o) {
    const auto curve = opt::false_negative_curve(o.alpha_min, o.alpha_max, o.steps, o.tolerance);
    out::Table table;
    table.columns = {"alpha", "delta_star", "p_even", "p_odd"};
    for (const auto& point : curve) {
        table.rows.push_back({point.alpha, point.delta_star, point.p_even, point.p_odd});
    }
    return emit_table(table, o.out_path, o.format,
                      "False-negative probability at the optimal displacement");
}

int run_optimize(const OptimizeOpts& o) {
    const opt::Optimum best = opt::minimize_parity(o.alpha, o.tolerance);
    const double series = opt::parity_min_series(o.alpha);
    const ordered_json record{{"alpha", o.alpha},
                              {"delta_star", best.delta_star},
                              {"parity_at_min", best.parity_at_min},
                              {"p_even_at_min", best.p_even_at_min},
                              {"iterations", best.iterations},
                              {"bracket_lo", best.bracket_lo},
                              {"bracket_hi", best.bracket_hi},
                              {"series_delta", series},
                              {"relative_gap",
                               std::abs(best.delta_star - series) / best.delta_star}};
    return emit_record(record, o.out_path, o.format);
}

int run_simulate(const SimulateOpts& o) {
    if (o.auto_delta == o.delta_given) {
        throw std::invalid_argument("simulate: give exactly one of --delta and --auto-delta");
    }
    const double delta =
        o.auto_delta ? opt::minimize_parity(o.alpha, o.tolerance).delta_star : o.delta;
    mc::RngSpec rng;
    rng.seed = o.seed;
    const mc::DetectionStats stats = mc::detection_experiment(o.alpha, delta, o.shots, rng);
    const ordered_json record{{"alpha", o.alpha},
                              {"delta", delta},
                              {"auto_delta", o.auto_delta},
                              {"shots", stats.shots},
                              {"seed", stats.seed},
                              {"algorithm", rng.algorithm},
                              {"odd_count", stats.odd_count},
                              {"even_count", stats.even_count},
                              {"false_negative_rate", stats.false_negative_rate},
                              {"false_positive_rate", stats.false_positive_rate},
                              {"ci_halfwidth", stats.ci_halfwidth}};
    return emit_record(record, o.out_path, o.format);
}

int run_ifo(const IfoOpts& o) {
    double amplitude = o.carrier_amplitude;
    if (o.n_carrier_given) {
        if (!(o.n_carrier > 0.0)) {
            throw std::invalid_argument("ifo: --n-carrier must be positive");
        }
        amplitude = std::sqrt(o.n_carrier);
    }
    ifo::IfoConfig config;
    if (o.topology == "asym") {
        config = ifo::IfoConfig::asymmetric(o.transmissivity, amplitude, o.phi);
    } else if (o.topology == "antisym") {
        config = ifo::IfoConfig::antisymmetric(amplitude, o.phi);
    } else {
        const double phi1 = o.phi1_given ? o.phi1 : o.phi;
        config = ifo::IfoConfig::general(o.reflectivity, o.transmissivity, phi1, o.phi2,
                                         amplitude);
    }
    const ifo::Displacement d = ifo::displacement_of(config, o.phi);
    const ifo::cxd dark = ifo::dark_port_amplitude(config);
    const ordered_json record{{"topology", o.topology},
                              {"reflectivity", config.reflectivity},
                              {"transmissivity", config.transmissivity},
                              {"phi1", config.phi1},
                              {"phi2", config.phi2},
                              {"carrier_amplitude", config.carrier_amplitude},
                              {"carrier_gain", d.carrier_gain},
                              {"photons", d.photons},
                              {"delta", d.delta},
                              {"dark_port_re", dark.real()},
                              {"dark_port_im", dark.imag()},
                              {"dark_port_abs", std::abs(dark)},
                              {"linearization_error", std::abs(std::abs(dark) - std::abs(d.delta))},
                              {"phi_caution", d.phi_caution}};
    return emit_record(record, o.out_path, o.format);
}

void add_output_flags(CLI::App* cmd, std::string& out_path, std::string& format,
                      const std::string& default_format) {
    format = default_format;
    cmd->add_option("--out", out_path, "Output path, '-' for stdout")
        ->capture_default_str();
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phase detection with displaced optical cat states: sweeps, optimization,\n"
                 "counting simulations, and interferometer response."};
    app.require_subcommand(1);
    app.set_version_flag("--version", "catphase 1.0.0");

    CurveOpts overlap_opts;
    auto* overlap_cmd = app.add_subcommand(
        "overlap-curve", "Overlap between initial and displaced cat states over a delta sweep");
    overlap_cmd->add_option("--alpha", overlap_opts.alphas, "Cat amplitude (repeatable)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    overlap_cmd->add_option("--delta-min", overlap_opts.delta_min)->capture_default_str();
    overlap_cmd->add_option("--delta-max", overlap_opts.delta_max)->capture_default_str();
    overlap_cmd->add_option("--steps", overlap_opts.steps)->capture_default_str();
    add_output_flags(overlap_cmd, overlap_opts.out_path, overlap_opts.format, "csv");

    CurveOpts parity_opts;
    auto* parity_cmd =
        app.add_subcommand("parity-curve", "Parity of the displaced cat state over a delta sweep");
    parity_cmd->add_option("--alpha", parity_opts.alphas, "Cat amplitude (repeatable)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    parity_cmd->add_option("--delta-min", parity_opts.delta_min)->capture_default_str();
    parity_cmd->add_option("--delta-max", parity_opts.delta_max)->capture_default_str();
    parity_cmd->add_option("--steps", parity_opts.steps)->capture_default_str();
    add_output_flags(parity_cmd, parity_opts.out_path, parity_opts.format, "csv");

    ErrorCurveOpts error_opts;
    auto* error_cmd = app.add_subcommand(
        "error-curve", "False-negative probability at the per-alpha optimal displacement");
    error_cmd->add_option("--alpha-min", error_opts.alpha_min)->capture_default_str();
    error_cmd->add_option("--alpha-max", error_opts.alpha_max)->capture_default_str();
    error_cmd->add_option("--steps", error_opts.steps)->capture_default_str();
    error_cmd->add_option("--tolerance", error_opts.tolerance)->capture_default_str();
    add_output_flags(error_cmd, error_opts.out_path, error_opts.format, "csv");

    OptimizeOpts optimize_opts;
    auto* optimize_cmd =
        app.add_subcommand("optimize", "Displacement minimizing the parity for one alpha");
    optimize_cmd->add_option("--alpha", optimize_opts.alpha, "Cat amplitude")->required();
    optimize_cmd->add_option("--tolerance", optimize_opts.tolerance)->capture_default_str();
    add_output_flags(optimize_cmd, optimize_opts.out_path, optimize_opts.format, "json");

    SimulateOpts simulate_opts;
    auto* simulate_cmd = app.add_subcommand(
        "simulate", "Photon-counting detection campaign (signal run plus null run)");
    simulate_cmd->add_option("--alpha", simulate_opts.alpha, "Cat amplitude")->required();
    auto* delta_opt =
        simulate_cmd->add_option("--delta", simulate_opts.delta, "Signal displacement");
    auto* auto_delta_opt = simulate_cmd->add_flag(
        "--auto-delta", simulate_opts.auto_delta, "Use the parity-minimizing displacement");
    delta_opt->excludes(auto_delta_opt);
    auto_delta_opt->excludes(delta_opt);
    simulate_cmd->add_option("--shots", simulate_opts.shots)
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--seed", simulate_opts.seed)->capture_default_str();
    simulate_cmd->add_option("--tolerance", simulate_opts.tolerance)->capture_default_str();
    add_output_flags(simulate_cmd, simulate_opts.out_path, simulate_opts.format, "json");

    IfoOpts ifo_opts;
    auto* ifo_cmd = app.add_subcommand(
        "ifo", "Linearized interferometer response and exact dark-port amplitude");
    ifo_cmd->add_option("--topology", ifo_opts.topology)
        ->check(CLI::IsMember({"asym", "antisym", "general"}))
        ->capture_default_str();
    ifo_cmd->add_option("--reflectivity", ifo_opts.reflectivity, "Splitter amplitude reflectivity")
        ->capture_default_str();
    ifo_cmd
        ->add_option("--transmissivity", ifo_opts.transmissivity,
                     "Splitter amplitude transmissivity")
        ->capture_default_str();
    auto* amp_opt = ifo_cmd->add_option("--carrier-amplitude", ifo_opts.carrier_amplitude,
                                        "Classical carrier amplitude A");
    amp_opt->capture_default_str();
    auto* ncarrier_opt = ifo_cmd->add_option("--n-carrier", ifo_opts.n_carrier,
                                             "Carrier photon number N (sets A = sqrt(N))");
    ncarrier_opt->excludes(amp_opt);
    amp_opt->excludes(ncarrier_opt);
    ifo_cmd->add_option("--phi", ifo_opts.phi, "Signal phase shift")->capture_default_str();
    auto* phi1_opt =
        ifo_cmd->add_option("--phi1", ifo_opts.phi1, "Arm 1 phase (general topology)");
    ifo_cmd->add_option("--phi2", ifo_opts.phi2, "Arm 2 phase (general topology)")
        ->capture_default_str();
    add_output_flags(ifo_cmd, ifo_opts.out_path, ifo_opts.format, "json");

    int rc = kOk;
    overlap_cmd->callback([&] { rc = run_overlap_curve(overlap_opts); });
    parity_cmd->callback([&] { rc = run_parity_curve(parity_opts); });
    error_cmd->callback([&] { rc = run_error_curve(error_opts); });
    optimize_cmd->callback([&] { rc = run_optimize(optimize_opts); });
    simulate_cmd->callback([&] {
        simulate_opts.delta_given = delta_opt->count() > 0;
        rc = run_simulate(simulate_opts);
    });
    ifo_cmd->callback([&] {
        ifo_opts.n_carrier_given = ncarrier_opt->count() > 0;
        ifo_opts.phi1_given = phi1_opt->count() > 0;
        rc = run_ifo(ifo_opts);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const catphase::fock::truncation_error& e) {
        std::cerr << "catphase: " << e.what() << "\n";
        return kNumerical;
    } catch (const opt::bracketing_error& e) {
        std::cerr << "catphase: " << e.what() << "\n";
        return kNumerical;
    } catch (const std::range_error& e) {
        std::cerr << "catphase: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "catphase: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "catphase: " << e.what() << "\n";
        return kNumerical;
    }
    return rc;
}
