// Command-line front door: validate problem configs, tabulate optimality
// bounds, run recoveries, stress the worst-case formula with adversarial
// attacks, and sweep convergence rates. Exit codes: 0 success, 1
// precondition or validation failure, 2 invariant violation, 3 I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "specrec/specrec.hpp"

namespace fs = std::filesystem;
using namespace specrec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitIo = 3;

struct CliOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> q_list;
    std::optional<std::size_t> trials;
    std::optional<Index> horizon;
    std::optional<double> match_const;
    std::string input;
};

RunConfig effective_config(const CliOptions& cli) {
    RunConfig cfg = load_config(cli.config_path);
    if (cli.seed) cfg.seed = *cli.seed;
    if (cli.trials) cfg.trials = *cli.trials;
    if (cli.horizon) cfg.horizon = *cli.horizon;
    if (cli.match_const) {
        cfg.match_constant = *cli.match_const;
        if (std::holds_alternative<MatchedDecay>(cfg.strategy)) {
            cfg.strategy = MatchedDecay{cfg.match_constant};
        }
    }
    if (cli.q_list) {
        cfg.qs.clear();
        std::string s = *cli.q_list;
        std::replace(s.begin(), s.end(), ',', ' ');
        std::istringstream in(s);
        std::string token;
        while (in >> token) {
            if (token == "inf") {
                cfg.qs.push_back(std::numeric_limits<double>::infinity());
            } else {
                cfg.qs.push_back(std::stod(token));
            }
        }
    }
    return cfg;
}

fs::path out_dir(const CliOptions& cli) {
    fs::path dir = cli.out ? fs::path(*cli.out) : fs::path(".");
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path.string());
    out << content;
    if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

double first_delta(const RunConfig& cfg) {
    if (cfg.deltas.empty()) {
        throw ConfigError("this command needs at least one 'delta' in the config");
    }
    return cfg.deltas.front();
}

int cmd_validate(const CliOptions& cli) {
    const RunConfig cfg = effective_config(cli);
    const SpectralProblem problem = cfg.build_problem();
    const auto violations = problem.validate();
    for (const auto& v : violations) {
        std::cout << "violation at index " << v.index << ": " << v.message << "\n";
    }
    try {
        const auto constants = certify_constants(problem, cfg.horizon);
        std::cout << "norm constants: c1 = " << format_number(constants.c1)
                  << (constants.c1_stable ? " (stable)" : " (grows with horizon)")
                  << ", c2 = " << format_number(constants.c2)
                  << (constants.c2_stable ? " (stable)" : " (grows with horizon)") << "\n";
    } catch (const CertificationError& e) {
        std::cout << "norm constants: not certifiable (" << e.what() << ")\n";
    }
    if (violations.empty()) {
        std::cout << "problem is clean up to horizon " << problem.horizon() << "\n";
        return kExitOk;
    }
    return kExitPrecondition;
}

int cmd_bounds(const CliOptions& cli) {
    const RunConfig cfg = effective_config(cli);
    const SpectralProblem problem = cfg.build_problem();
    if (cfg.deltas.empty()) throw ConfigError("'bounds' needs a delta list");

    std::string csv = csv_row({"delta", "n", "threshold", "lower_any_n", "lower_at_n",
                               "upper_truncation", "optimality_constant",
                               "ratio_upper_to_lower", "matched_window_empty", "flags"});
    for (const double delta : cfg.deltas) {
        const Index n = select_n(problem, delta, cfg.strategy);
        const auto report = sandwich(problem, delta, n, cfg.small_delta_c);
        std::string flags;
        for (const auto flag : report.flags) {
            if (!flags.empty()) flags += ';';
            flags += flag_name(flag);
        }
        csv += csv_row({format_number(report.delta), std::to_string(report.n),
                        std::to_string(report.threshold), format_number(report.lower_any_n),
                        format_number(report.lower_at_n),
                        format_number(report.upper_truncation),
                        format_number(report.optimality_constant),
                        format_number(report.ratio_upper_to_lower),
                        report.matched_window_empty ? "1" : "0", flags});
    }
    const fs::path path = out_dir(cli) / "bounds.csv";
    write_file(path, csv);
    std::cout << "wrote " << path.string() << " (" << cfg.deltas.size() << " rows)\n";
    return kExitOk;
}

int cmd_recover(const CliOptions& cli) {
    const RunConfig cfg = effective_config(cli);
    if (cli.input.empty()) throw ConfigError("'recover' needs --in FILE");
    const fs::path out = out_dir(cli);

    const bool json_input = fs::path(cli.input).extension() == ".json";
    if (cfg.family == RunConfig::Family::Heat) {
        if (!json_input) {
            throw ConfigError("heat recovery expects a coefficient record (JSON)");
        }
        std::ifstream in(cli.input);
        if (!in) throw std::ios_base::failure("cannot open " + cli.input);
        std::ostringstream buf;
        buf << in.rdbuf();
        const NoisyObservation obs = observation_from_json(buf.str());
        HeatProblem hp;
        hp.gamma = cfg.gamma;
        hp.t = cfg.t;
        hp.T = cfg.T;
        hp.s = cfg.s;
        const auto result = solve_backward(hp, obs, cfg.strategy, cfg.horizon);
        write_file(out / "recovered.json", to_json(result.u_t));
        write_file(out / "report.json", to_json(result.report));
    } else if (cfg.family == RunConfig::Family::NumDiff) {
        if (json_input) {
            std::ifstream in(cli.input);
            if (!in) throw std::ios_base::failure("cannot open " + cli.input);
            std::ostringstream buf;
            buf << in.rdbuf();
            const NoisyObservation obs = observation_from_json(buf.str());
            const auto result = differentiate_coeffs(obs, cfg.gamma, cfg.strategy,
                                                     cfg.horizon, cfg.grid_samples);
            write_file(out / "recovered.json", to_json(result.coeffs));
            write_file(out / "report.json", to_json(result.report));
        } else {
            std::ifstream in(cli.input);
            if (!in) throw std::ios_base::failure("cannot open " + cli.input);
            const GridFunction signal = read_signal_csv(in);
            const auto result = differentiate(signal, first_delta(cfg), cfg.gamma,
                                              cfg.strategy, cfg.horizon);
            std::ostringstream csv;
            write_signal_csv(csv, result.derivative);
            write_file(out / "recovered.csv", csv.str());
            write_file(out / "report.json", to_json(result.report));
        }
    } else {
        throw ConfigError("'recover' needs family numdiff or heat");
    }
    std::cout << "wrote recovery and report under " << out.string() << "\n";
    return kExitOk;
}

int cmd_attack(const CliOptions& cli) {
    const RunConfig cfg = effective_config(cli);
    const SpectralProblem problem = cfg.build_problem();
    const double delta = first_delta(cfg);
    const Index n = select_n(problem, delta, cfg.strategy);

    const auto verdict = attack_verdict(problem, delta, n, cfg.trials, cfg.seed);
    const std::vector<AttackInstance> witnesses{
        extremal_source(problem, delta), extremal_pair(problem, delta, n),
        brute_force_worst_case(problem, delta, n, problem.horizon()).witness};
    const fs::path path = out_dir(cli) / "witnesses.json";
    write_file(path, witness_fixture_json(verdict, witnesses));

    std::cout << (verdict.pass ? "PASS" : "FAIL") << " n=" << n
              << " formula=" << format_number(verdict.formula_total)
              << " oracle_gap=" << format_number(verdict.oracle_gap)
              << " attainment_gap=" << format_number(verdict.attainment_gap)
              << " random_max=" << format_number(verdict.random_max) << "\n";
    return verdict.pass ? kExitOk : kExitInvariant;
}

int cmd_sweep(const CliOptions& cli) {
    const RunConfig cfg = effective_config(cli);
    if (cfg.deltas.size() < 2) throw ConfigError("'sweep' needs at least two deltas");
    const auto app = cfg.build_application();
    const auto table = rate_experiment(app, cfg.deltas, cfg.trials, cfg.seed,
                                       cfg.rate_options());

    // Emitted rows must respect the theory; a breach is an invariant failure,
    // not a warning.
    for (const auto& row : table.rows) {
        if (!(row.lower <= row.total * (1.0 + 1e-12)) ||
            !(row.empirical_max <= row.total * (1.0 + 1e-12))) {
            std::cerr << "invariant breach at delta = " << format_number(row.delta) << "\n";
            return kExitInvariant;
        }
    }

    std::vector<std::string> header{"delta",      "n",     "threshold", "tail_term",
                                    "noise_term", "total", "lower",     "empirical_max"};
    const auto q_label = [](double q) {
        return std::isinf(q) ? std::string("inf") : format_number(q);
    };
    for (const double q : cfg.qs) {
        header.push_back("lq_lower_q" + q_label(q));
        header.push_back("lq_upper_q" + q_label(q));
        header.push_back("lq_empirical_q" + q_label(q));
    }
    header.push_back("slope_so_far");

    std::string csv = csv_row(header);
    for (const auto& row : table.rows) {
        std::vector<std::string> cells{format_number(row.delta), std::to_string(row.n),
                                       std::to_string(row.threshold),
                                       format_number(row.tail_term),
                                       format_number(row.noise_term),
                                       format_number(row.total), format_number(row.lower),
                                       format_number(row.empirical_max)};
        for (const double q : cfg.qs) {
            const auto it = row.lq.find(q);
            const LqBracket bracket =
                it == row.lq.end()
                    ? LqBracket{std::numeric_limits<double>::quiet_NaN(),
                                std::numeric_limits<double>::quiet_NaN(),
                                std::numeric_limits<double>::quiet_NaN()}
                    : it->second;
            cells.push_back(format_number(bracket.lower));
            cells.push_back(format_number(bracket.upper));
            cells.push_back(format_number(bracket.empirical));
        }
        cells.push_back(format_number(row.slope_so_far));
        csv += csv_row(cells);
    }

    std::string fit_csv = csv_row({"slope", "intercept", "residual_rms", "abscissa"});
    if (table.fit) {
        fit_csv += csv_row({format_number(table.fit->slope),
                            format_number(table.fit->intercept),
                            format_number(table.fit->residual_rms), table.fit->abscissa});
    } else {
        std::cout << "note: single delta, no slope fitted\n";
    }

    std::string plot = csv_row({"series", "x", "y"});
    for (const auto& row : table.rows) {
        plot += csv_row({"total", format_number(row.delta), format_number(row.total)});
        plot += csv_row({"lower", format_number(row.delta), format_number(row.lower)});
        plot += csv_row({"empirical_max", format_number(row.delta),
                         format_number(row.empirical_max)});
    }

    const fs::path dir = out_dir(cli);
    write_file(dir / "rates.csv", csv);
    write_file(dir / "rates_fit.csv", fit_csv);
    write_file(dir / "plot.csv", plot);
    std::cout << "wrote " << (dir / "rates.csv").string();
    if (table.fit) {
        std::cout << " (fitted slope " << format_number(table.fit->slope) << " vs "
                  << table.fit->abscissa << ")";
    }
    std::cout << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal recovery of spectral operator values by truncation"};
    app.require_subcommand(1);
    app.fallthrough();

    CliOptions cli;
    app.add_option("--config", cli.config_path, "run configuration file")->required();
    app.add_option("--seed", cli.seed, "random seed override");
    app.add_option("--out", cli.out, "output directory (default: .)");
    app.add_option("--q", cli.q_list, "comma-separated q exponents, e.g. 2,4,inf");
    app.add_option("--trials", cli.trials, "random attack trials override");
    app.add_option("--horizon", cli.horizon, "index horizon override");
    app.add_option("--match-const", cli.match_const, "matching constant override");

    auto* validate = app.add_subcommand("validate", "check sequence and certificate invariants");
    auto* bounds = app.add_subcommand("bounds", "tabulate lower/upper optimality bounds");
    auto* recover = app.add_subcommand("recover", "run one truncation recovery");
    recover->add_option("--in", cli.input, "input signal CSV or coefficient JSON")->required();
    auto* attack = app.add_subcommand("attack", "adversarial verification of the error formula");
    auto* sweep = app.add_subcommand("sweep", "convergence rate experiment over a delta grid");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(cli);
        if (bounds->parsed()) return cmd_bounds(cli);
        if (recover->parsed()) return cmd_recover(cli);
        if (attack->parsed()) return cmd_attack(cli);
        if (sweep->parsed()) return cmd_sweep(cli);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const HorizonError& e) {
        std::cerr << "horizon error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const UncertifiedTailError& e) {
        std::cerr << "certification error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const CertificationError& e) {
        std::cerr << "certification error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}
