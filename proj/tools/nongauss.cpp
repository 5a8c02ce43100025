// Command-line front end: parameter sweeps, figure-data reproduction, and
// closed-form vs Fock-oracle validation reports.
//
// Exit codes: 0 success, 1 I/O failure, 2 argument/validation error,
// 3 oracle-check mismatch, 4 degenerate physics (zero-probability
// conditioning).

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "nongauss/closed_form.hpp"
#include "nongauss/dense_coding.hpp"
#include "nongauss/fock/network.hpp"
#include "nongauss/io.hpp"
#include "nongauss/sweeps.hpp"

namespace {

using namespace nongauss;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitArgs = 2;
constexpr int kExitOracleMismatch = 3;
constexpr int kExitDegenerate = 4;

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int points = 1;
};

// "min:max:points" or a single value.
GridSpec parse_grid_spec(const std::string& text) {
    GridSpec spec;
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        spec.lo = spec.hi = std::stod(text);
        spec.points = 1;
        return spec;
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw std::invalid_argument("grid spec needs min:max:points");
    spec.lo = std::stod(text.substr(0, c1));
    spec.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    spec.points = std::stoi(text.substr(c2 + 1));
    if (spec.points < 1) throw std::invalid_argument("grid needs at least one point");
    if (spec.points > 1 && !(spec.hi > spec.lo)) {
        throw std::invalid_argument("grid bounds must increase");
    }
    return spec;
}

struct CommonFlags {
    std::string config_path;
    std::string lambda_spec = "0.4";
    double tap_t = 0.9;
    double path_t = 0.75;
    double eta = 0.6;
    double nu = 1e-3;
    bool ideal = false;
    std::string scheme = "single";
    double alpha = 1.5;
    double phase = 0.0;
    int cutoff = 0;  // 0 = choose from lambda
    bool stamp = false;
};

void add_config_flags(CLI::App* cmd, CommonFlags& flags, bool with_scheme = true) {
    cmd->add_option("--config", flags.config_path,
                    "key=value file; command-line flags take precedence");
    cmd->add_option("--lambda", flags.lambda_spec, "squeezing lambda: value or min:max:points");
    cmd->add_option("--T", flags.tap_t, "tap beam-splitter transmittance");
    cmd->add_option("--TL", flags.path_t, "path transmittance (linear loss)");
    cmd->add_option("--eta", flags.eta, "detector quantum efficiency");
    cmd->add_option("--nu", flags.nu, "mean dark counts per gate");
    cmd->add_flag("--ideal", flags.ideal, "shorthand for TL=1, eta=1, nu=0");
    if (with_scheme) {
        cmd->add_option("--scheme", flags.scheme, "single|two")
            ->check(CLI::IsMember({"single", "two"}));
    }
    cmd->add_flag("--stamp", flags.stamp, "add a timestamp metadata line");
}

// Simple key=value configuration; '#' starts a comment. A file value applies
// only when the matching flag was not given on the command line.
void apply_config_file(const CLI::App* cmd, CommonFlags& flags) {
    if (flags.config_path.empty()) return;
    std::istringstream in(read_file(flags.config_path));
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config file needs key=value lines");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto overridden = [&](const std::string& flag) {
            return cmd->get_option_no_throw(flag) != nullptr && cmd->count(flag) > 0;
        };
        if (key == "lambda") {
            if (!overridden("--lambda")) flags.lambda_spec = value;
        } else if (key == "T") {
            if (!overridden("--T")) flags.tap_t = std::stod(value);
        } else if (key == "TL") {
            if (!overridden("--TL")) flags.path_t = std::stod(value);
        } else if (key == "eta") {
            if (!overridden("--eta")) flags.eta = std::stod(value);
        } else if (key == "nu") {
            if (!overridden("--nu")) flags.nu = std::stod(value);
        } else if (key == "alpha") {
            if (!overridden("--alpha")) flags.alpha = std::stod(value);
        } else if (key == "phase") {
            if (!overridden("--phase")) flags.phase = std::stod(value);
        } else if (key == "cutoff") {
            if (!overridden("--cutoff")) flags.cutoff = std::stoi(value);
        } else if (key == "scheme") {
            if (value != "single" && value != "two") {
                throw std::invalid_argument("scheme must be single or two");
            }
            if (!overridden("--scheme")) flags.scheme = value;
        } else if (key == "ideal") {
            if (!overridden("--ideal")) flags.ideal = (value == "1" || value == "true");
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
}

ExperimentConfig make_config(const CommonFlags& flags, double lambda) {
    ExperimentConfig config;
    config.squeezing.lambda = lambda;
    config.setup.tap_transmittance = flags.tap_t;
    if (flags.ideal) {
        config.setup.path_transmittance = 1.0;
        config.detector.efficiency = 1.0;
        config.detector.dark_mean = 0.0;
    } else {
        config.setup.path_transmittance = flags.path_t;
        config.detector.efficiency = flags.eta;
        config.detector.dark_mean = flags.nu;
    }
    config.scheme = flags.scheme == "two" ? Scheme::TwoMode : Scheme::SingleMode;
    config.validate();
    return config;
}

std::vector<double> lambda_grid(const CommonFlags& flags) {
    const GridSpec spec = parse_grid_spec(flags.lambda_spec);
    if (spec.lo < 0.0 || spec.hi > 0.99) {
        throw std::invalid_argument("lambda grid must stay within [0, 0.99]");
    }
    return linspace(spec.lo, spec.hi, spec.points);
}

// Per-mode cutoff large enough for 1e-6 cross-engine agreement; the
// conditional state amplifies the input truncation tail by 1/sqrt(P_det).
int pick_cutoff(double lambda) {
    if (lambda <= 0.15) return 24;
    if (lambda <= 0.32) return 32;
    if (lambda <= 0.42) return 36;
    if (lambda <= 0.47) return 40;
    if (lambda <= 0.55) return 44;
    if (lambda <= 0.60) return 48;
    return 64;
}

void add_stamp(SweepResult& result, bool stamp) {
    if (!stamp) return;
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    result.metadata.emplace_back("generated", buf);
}

void write_sweep(const SweepResult& result, const std::string& path, const std::string& format) {
    write_file_atomic(path, format == "json" ? to_json(result) : to_csv(result));
}

int run_scan(const std::string& kind, const CommonFlags& flags, const std::string& out,
             const std::string& format) {
    if (out.empty()) throw std::invalid_argument("--out is required");
    const auto lambdas = lambda_grid(flags);
    const ExperimentConfig base = make_config(flags, lambdas.front());

    SweepResult result;
    if (kind == "variance") {
        result = variance_scan(base, lambdas, flags.phase);
    } else if (kind == "mi") {
        if (base.scheme != Scheme::TwoMode) {
            throw std::invalid_argument("--kind mi needs --scheme two");
        }
        result = mi_scan(base, lambdas, SignalAlphabet{flags.alpha});
    } else if (kind == "pdet") {
        result = pdet_scan(base, lambdas);
    } else if (kind == "mean-photon") {
        result = mean_photon_scan(base, lambdas);
    } else {
        throw std::invalid_argument("unknown scan kind: " + kind);
    }
    add_stamp(result, flags.stamp);
    write_sweep(result, out, format);
    return kExitOk;
}

std::string wigner_csv(const ExperimentConfig& config, const GridSpec& gx,
                       const GridSpec& gp, bool verify) {
    const SignedGaussianMixture mixture = wigner_mixture(config);
    const auto xs = linspace(gx.lo, gx.hi, gx.points);
    const auto ps = linspace(gp.lo, gp.hi, gp.points);
    std::ostringstream out;
    out << "x,p,w\n";
    double integral = 0.0;
    for (double x : xs) {
        for (double p : ps) {
            const double w = pdf_at(mixture, x, p);
            integral += w;
            out << format_double(x) << "," << format_double(p) << "," << format_double(w)
                << "\n";
        }
    }
    if (verify && gx.points > 1 && gp.points > 1) {
        // Trapezoid weights reduce to a constant cell area up to the borders.
        const double cell = (gx.hi - gx.lo) / (gx.points - 1) * (gp.hi - gp.lo) / (gp.points - 1);
        std::printf("grid integral deviation from 1: %s\n",
                    format_double(integral * cell - 1.0).c_str());
    }
    return out.str();
}

int run_wigner(const CommonFlags& flags, const std::string& grid, const std::string& out,
               bool verify) {
    if (out.empty()) throw std::invalid_argument("--out is required");
    const auto lambdas = lambda_grid(flags);
    if (lambdas.size() != 1) throw std::invalid_argument("wigner needs a single lambda");
    CommonFlags single = flags;
    single.scheme = "single";
    const ExperimentConfig config = make_config(single, lambdas.front());
    const GridSpec gspec = parse_grid_spec(grid);
    write_file_atomic(out, wigner_csv(config, gspec, gspec, verify));
    return kExitOk;
}

int run_oracle_check(const CommonFlags& flags, const std::string& out, bool allow_heavy) {
    const auto lambdas = lambda_grid(flags);
    if (lambdas.size() != 1) throw std::invalid_argument("oracle-check needs a single lambda");
    const double lambda = lambdas.front();
    if (lambda > 0.6 && !allow_heavy) {
        throw std::invalid_argument("lambda > 0.6 needs --allow-heavy (large cutoff, slow)");
    }
    const ExperimentConfig base = make_config(flags, lambda);
    const int cutoff = flags.cutoff > 0 ? flags.cutoff : pick_cutoff(lambda);

    const fock::OracleReport report = fock::run_oracle_check(base, fock::FockCutoff{cutoff});

    nlohmann::ordered_json j;
    j["pdet_rel_err"] = report.pdet_rel_err;
    j["pdf_max_abs_err"] = report.pdf_max_abs_err;
    j["variance_abs_err"] = report.variance_abs_err;
    j["wigner_max_abs_err"] = report.wigner_max_abs_err;
    j["bell_pdf_max_abs_err"] = report.bell_pdf_max_abs_err;
    j["channel_matrix_max_abs_err"] = report.channel_matrix_max_abs_err;
    j["mode_b_vacuum_overlap"] = report.mode_b_vacuum_overlap;
    j["dakna_trace_distance"] = report.dakna_trace_distance;
    const std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        write_file_atomic(out, text);
    }
    return report.pass(base.is_ideal()) ? kExitOk : kExitOracleMismatch;
}

SweepResult pdf_sweep(const ExperimentConfig& config, double lo, double hi, int points) {
    SweepResult result;
    result.kind = "pdf";
    result.param = "x";
    result.grid = linspace(lo, hi, points);
    result.metadata = config_metadata(config);
    if (config.scheme == Scheme::SingleMode) {
        const SignedGaussianMixture mixture = homodyne_mixture(config, 0.0);
        for (double x : result.grid) {
            result.value_ng.push_back(pdf_at(mixture, x));
            result.value_ref.push_back(squeezed_vacuum_pdf(config.squeezing.lambda, x));
        }
    } else {
        const SignedGaussianMixture marg = marginal_x(homodyne_mixture(config, 0.0));
        const double ref_var = reference_variance(config.squeezing.lambda, Scheme::TwoMode,
                                                  !config.is_ideal(),
                                                  config.setup.path_transmittance);
        for (double x : result.grid) {
            result.value_ng.push_back(pdf_at(marg, x));
            result.value_ref.push_back(std::exp(-x * x / (2.0 * ref_var)) /
                                       std::sqrt(2.0 * M_PI * ref_var));
        }
    }
    result.validate();
    return result;
}

int run_repro(const std::string& figure, const std::string& outdir, bool stamp) {
    namespace fs = std::filesystem;
    if (outdir.empty()) throw std::invalid_argument("--outdir is required");
    fs::create_directories(outdir);
    const std::string path = (fs::path(outdir) / (figure + ".csv")).string();

    CommonFlags ideal;
    ideal.ideal = true;
    CommonFlags practical;  // defaults are the practical parameters
    const auto lam_curve = [](double lo, double hi, int n) { return linspace(lo, hi, n); };

    SweepResult result;
    if (figure == "fig2" || figure == "fig12") {
        CommonFlags f = figure == "fig2" ? ideal : practical;
        result = pdf_sweep(make_config(f, 0.4), -5.0, 5.0, 201);
    } else if (figure == "fig3") {
        result = variance_scan(make_config(ideal, 0.4), lam_curve(0.01, 0.90, 90), 0.0);
    } else if (figure == "fig13") {
        result = variance_scan(make_config(practical, 0.4), lam_curve(0.0, 0.90, 91), 0.0);
    } else if (figure == "fig5" || figure == "fig6" || figure == "fig14" || figure == "fig15") {
        CommonFlags f = (figure == "fig5" || figure == "fig6") ? ideal : practical;
        const double lambda = (figure == "fig5" || figure == "fig14") ? 0.4 : 0.8;
        const GridSpec grid{-4.0, 4.0, 161};
        write_file_atomic(path, wigner_csv(make_config(f, lambda), grid, grid, false));
        return kExitOk;
    } else if (figure == "fig7" || figure == "fig9") {
        CommonFlags f = ideal;
        f.scheme = "two";
        if (figure == "fig7") {
            result = pdf_sweep(make_config(f, 0.4), -5.0, 5.0, 201);
        } else {
            result = variance_scan(make_config(f, 0.4), lam_curve(0.01, 0.90, 90), 0.0);
        }
    } else if (figure == "fig8") {
        result = mean_photon_scan(make_config(ideal, 0.4), lam_curve(0.01, 0.80, 80));
    } else if (figure == "fig10" || figure == "fig11" || figure == "fig16" ||
               figure == "fig17") {
        CommonFlags f = (figure == "fig10" || figure == "fig11") ? ideal : practical;
        f.scheme = "two";
        const double alpha = (figure == "fig10" || figure == "fig16") ? 1.5 : 0.7;
        result = mi_scan(make_config(f, 0.4), lam_curve(0.01, 0.99, 99),
                         SignalAlphabet{alpha});
    } else {
        throw std::invalid_argument("unknown figure id: " + figure);
    }
    add_stamp(result, stamp);
    write_sweep(result, path, "csv");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photon-subtraction squeezing simulator"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string kind = "variance";
    std::string out;
    std::string outdir;
    std::string format = "csv";
    std::string grid = "-4:4:81";
    std::string figure;
    bool verify = false;
    bool allow_heavy = false;

    CLI::App* scan = app.add_subcommand("scan", "parameter sweep over lambda");
    add_config_flags(scan, flags);
    scan->add_option("--kind", kind, "variance|mi|pdet|mean-photon")
        ->check(CLI::IsMember({"variance", "mi", "pdet", "mean-photon"}));
    scan->add_option("--alpha", flags.alpha, "QPSK displacement amplitude");
    scan->add_option("--phase", flags.phase, "homodyne quadrature phase");
    scan->add_option("--out", out, "output path");
    scan->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* wig = app.add_subcommand("wigner", "Wigner function on a grid");
    add_config_flags(wig, flags, false);
    wig->add_option("--grid", grid, "min:max:points for both axes");
    wig->add_option("--out", out, "output path");
    wig->add_flag("--verify", verify, "print the grid-integral deviation");

    CLI::App* oracle = app.add_subcommand("oracle-check", "closed form vs Fock oracle");
    add_config_flags(oracle, flags, false);
    oracle->add_option("--cutoff", flags.cutoff, "per-mode Fock cutoff (0 = auto)");
    oracle->add_option("--out", out, "report path (default: stdout)");
    oracle->add_flag("--allow-heavy", allow_heavy, "permit lambda > 0.6");

    CLI::App* repro = app.add_subcommand("repro", "reproduce figure data");
    repro->add_option("--figure", figure, "figure id (fig2..fig17)")->required();
    repro->add_option("--outdir", outdir, "output directory")->required();
    repro->add_flag("--stamp", flags.stamp, "add a timestamp metadata line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitArgs;
    }

    try {
        if (scan->parsed()) {
            apply_config_file(scan, flags);
            return run_scan(kind, flags, out, format);
        }
        if (wig->parsed()) {
            apply_config_file(wig, flags);
            return run_wigner(flags, grid, out, verify);
        }
        if (oracle->parsed()) {
            apply_config_file(oracle, flags);
            return run_oracle_check(flags, out, allow_heavy);
        }
        if (repro->parsed()) return run_repro(figure, outdir, flags.stamp);
    } catch (const nongauss::DegenerateConditioning& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitArgs;
    } catch (const nongauss::NotIdeal& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitArgs;
    } catch (const nongauss::CutoffTooSmall& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitArgs;
    } catch (const nongauss::InvalidDistribution& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitArgs;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
    return kExitOk;
}
