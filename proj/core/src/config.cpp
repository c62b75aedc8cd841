#include "specrec/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "specrec/errors.hpp"

namespace specrec {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& raw, const std::string& key) {
    const std::string s = trim(raw);
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse number '" + s + "'");
    }
    if (used != s.size()) {
        throw ConfigError("key '" + key + "': trailing junk in number '" + s + "'");
    }
    return value;
}

std::uint64_t parse_u64(const std::string& raw, const std::string& key) {
    const std::string s = trim(raw);
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse integer '" + s + "'");
    }
    if (used != s.size()) {
        throw ConfigError("key '" + key + "': trailing junk in integer '" + s + "'");
    }
    return value;
}

std::vector<double> parse_double_list(const std::string& raw, const std::string& key) {
    std::string s = raw;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<double> out;
    std::string token;
    while (in >> token) out.push_back(parse_double(token, key));
    return out;
}

std::map<std::string, std::string> parse_tag_args(const std::string& inner,
                                                  const std::string& tag) {
    std::map<std::string, std::string> out;
    std::istringstream in(inner);
    std::string piece;
    Index positional = 0;
    while (std::getline(in, piece, ',')) {
        piece = trim(piece);
        if (piece.empty()) continue;
        const auto eq = piece.find('=');
        if (eq == std::string::npos) {
            out["#" + std::to_string(positional++)] = piece;
        } else {
            out[trim(piece.substr(0, eq))] = trim(piece.substr(eq + 1));
        }
    }
    return out;
}

double tag_value(const std::map<std::string, std::string>& args, const std::string& name,
                 Index position, std::optional<double> fallback, const std::string& tag) {
    if (const auto it = args.find(name); it != args.end()) {
        return parse_double(it->second, tag + "." + name);
    }
    if (const auto it = args.find("#" + std::to_string(position)); it != args.end()) {
        return parse_double(it->second, tag + "." + name);
    }
    if (fallback) return *fallback;
    throw ConfigError("rule '" + tag + "' is missing parameter '" + name + "'");
}

}  // namespace

SequenceRule parse_rule_tag(const std::string& tag) {
    const std::string s = trim(tag);
    const auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') {
        throw ConfigError("malformed rule tag '" + s + "' (expected name(...))");
    }
    const std::string name = trim(s.substr(0, open));
    const std::string inner = s.substr(open + 1, s.size() - open - 2);
    const auto args = parse_tag_args(inner, name);

    if (name == "power_paired") {
        return PowerPaired{tag_value(args, "p", 0, std::nullopt, name)};
    }
    if (name == "power") {
        return Power{tag_value(args, "p", 0, std::nullopt, name)};
    }
    if (name == "general_form") {
        return GeneralForm{tag_value(args, "c", 0, 1.0, name),
                           tag_value(args, "eta", 1, 0.0, name),
                           tag_value(args, "alpha", 2, 0.0, name),
                           tag_value(args, "beta", 3, 1.0, name)};
    }
    if (name == "tabulated") {
        Tabulated tab;
        if (const auto it = args.find("logs"); it != args.end()) {
            tab.log_values = parse_double_list(it->second, "tabulated.logs");
        } else if (const auto it0 = args.find("#0"); it0 != args.end()) {
            tab.log_values = parse_double_list(it0->second, "tabulated.logs");
        }
        if (tab.log_values.empty()) {
            throw ConfigError("rule 'tabulated' needs a nonempty 'logs' list");
        }
        if (const auto it = args.find("step"); it != args.end()) {
            tab.log_step = parse_double(it->second, "tabulated.step");
        }
        return tab;
    }
    throw ConfigError("unknown rule tag '" + name + "'");
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    bool strategy_minimize = false;
    std::optional<Index> n_max;
    std::optional<Index> ratio_from;
    std::optional<Index> ratio_period;

    std::istringstream in(text);
    std::string line;
    Index line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": key '" + key +
                              "' has no value");
        }

        if (key == "schema_version") {
            cfg.schema_version = static_cast<int>(parse_u64(value, key));
            if (cfg.schema_version != 1) {
                throw ConfigError("unsupported schema_version " + value);
            }
        } else if (key == "family") {
            if (value == "numdiff") cfg.family = RunConfig::Family::NumDiff;
            else if (value == "heat") cfg.family = RunConfig::Family::Heat;
            else if (value == "custom") cfg.family = RunConfig::Family::Custom;
            else throw ConfigError("unknown family '" + value + "'");
        } else if (key == "gamma") {
            cfg.gamma = parse_double(value, key);
        } else if (key == "t") {
            cfg.t = parse_double(value, key);
        } else if (key == "T") {
            cfg.T = parse_double(value, key);
        } else if (key == "s") {
            cfg.s = parse_double(value, key);
        } else if (key == "mu") {
            cfg.mu_rule = parse_rule_tag(value);
        } else if (key == "xi") {
            cfg.xi_rule = parse_rule_tag(value);
        } else if (key == "ratio_from") {
            ratio_from = parse_u64(value, key);
        } else if (key == "ratio_period") {
            ratio_period = parse_u64(value, key);
        } else if (key == "horizon") {
            cfg.horizon = parse_u64(value, key);
        } else if (key == "delta") {
            cfg.deltas = parse_double_list(value, key);
        } else if (key == "strategy") {
            if (value == "threshold") cfg.strategy = ThresholdRule{};
            else if (value == "minimize") strategy_minimize = true;
            else if (value == "matched") cfg.strategy = MatchedDecay{cfg.match_constant};
            else throw ConfigError("unknown strategy '" + value + "'");
        } else if (key == "n_max") {
            n_max = parse_u64(value, key);
        } else if (key == "match_const") {
            cfg.match_constant = parse_double(value, key);
        } else if (key == "trials") {
            cfg.trials = parse_u64(value, key);
        } else if (key == "seed") {
            cfg.seed = parse_u64(value, key);
        } else if (key == "q") {
            cfg.qs = parse_double_list(value, key);
        } else if (key == "chi") {
            cfg.chi = parse_double(value, key);
        } else if (key == "measure_q") {
            cfg.measure_q = parse_double(value, key);
        } else if (key == "grid_samples") {
            cfg.grid_samples = parse_u64(value, key);
        } else if (key == "small_delta_c") {
            cfg.small_delta_c = parse_double(value, key);
        } else {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key +
                              "'");
        }
    }

    if (strategy_minimize) cfg.strategy = MinimizeBound{n_max};
    if (const auto* matched = std::get_if<MatchedDecay>(&cfg.strategy)) {
        (void)matched;
        cfg.strategy = MatchedDecay{cfg.match_constant};
    }
    if (ratio_from || ratio_period) {
        cfg.certificate = RatioCertificate{ratio_from.value_or(0), ratio_period.value_or(1)};
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::ios_base::failure("cannot open config file " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

SpectralProblem RunConfig::build_problem() const {
    switch (family) {
        case Family::NumDiff:
            return numdiff_problem(gamma, horizon);
        case Family::Heat: {
            HeatProblem hp;
            hp.gamma = gamma;
            hp.t = t;
            hp.T = T;
            hp.s = s;
            return heat_spectral_problem(hp, horizon);
        }
        case Family::Custom:
            break;
    }
    if (!mu_rule) throw ConfigError("custom problem is missing the 'mu' rule");
    if (!xi_rule) throw ConfigError("custom problem is missing the 'xi' rule");
    return SpectralProblem(Sequence(*mu_rule), Sequence(*xi_rule), certificate, horizon);
}

RateApplication RunConfig::build_application() const {
    switch (family) {
        case Family::NumDiff:
            return NumDiffApp{gamma};
        case Family::Heat: {
            HeatProblem hp;
            hp.gamma = gamma;
            hp.t = t;
            hp.T = T;
            hp.s = s;
            return HeatApp{hp};
        }
        case Family::Custom:
            break;
    }
    throw ConfigError("sweep needs an application family (numdiff or heat)");
}

RateOptions RunConfig::rate_options() const {
    RateOptions opts;
    opts.match_constant = match_constant;
    opts.horizon = horizon;
    opts.grid_samples = grid_samples;
    opts.qs = qs;
    opts.chi = chi;
    return opts;
}

}  // namespace specrec
