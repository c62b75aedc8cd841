#include "specrec/serialization.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "specrec/csv.hpp"
#include "specrec/errors.hpp"

namespace specrec {

namespace {

using nlohmann::json;

json coeffs_to_json(const CoefficientVector& v) {
    json arr = json::array();
    for (const auto& [k, value] : v.entries()) {
        arr.push_back(json::array({k, value}));
    }
    return json{{"coeffs", arr}};
}

CoefficientVector coeffs_from_json(const json& j) {
    CoefficientVector out;
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw ConfigError("coefficient record needs a 'coeffs' array");
    }
    for (const auto& pair : j["coeffs"]) {
        if (!pair.is_array() || pair.size() != 2) {
            throw ConfigError("coefficient entries must be [index, value] pairs");
        }
        out.set(pair[0].get<Index>(), pair[1].get<double>());
    }
    return out;
}

const char* label_name(AttackLabel label) {
    switch (label) {
        case AttackLabel::ExtremalSource: return "extremal_source";
        case AttackLabel::ExtremalPair: return "extremal_pair";
        case AttackLabel::Random: return "random";
    }
    return "random";
}

json instance_to_json(const AttackInstance& instance) {
    return json{{"label", label_name(instance.label)},
                {"f", coeffs_to_json(instance.f)["coeffs"]},
                {"f_delta", coeffs_to_json(instance.f_delta)["coeffs"]}};
}

json number_or_null(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

}  // namespace

std::string flag_name(OptimalityFlag flag) {
    switch (flag) {
        case OptimalityFlag::BelowThresholdSharp: return "below_threshold_sharp";
        case OptimalityFlag::AtThresholdConstant: return "at_threshold_constant";
        case OptimalityFlag::AboveThresholdNoGain: return "above_threshold_no_gain";
        case OptimalityFlag::OptimalChain: return "optimal_chain";
        case OptimalityFlag::SmallDeltaSharp: return "small_delta_sharp";
        case OptimalityFlag::MatchedWindowRegime: return "matched_window_regime";
    }
    return "unknown";
}

std::string to_json(const CoefficientVector& v) { return coeffs_to_json(v).dump(2); }

CoefficientVector coefficient_vector_from_json(const std::string& text) {
    try {
        return coeffs_from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad coefficient JSON: ") + e.what());
    }
}

std::string to_json(const NoisyObservation& obs) {
    json j = coeffs_to_json(obs.coeffs);
    j["delta"] = obs.delta;
    return j.dump(2);
}

NoisyObservation observation_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        if (!j.contains("delta")) throw ConfigError("observation needs a 'delta' field");
        return NoisyObservation(coeffs_from_json(j), j["delta"].get<double>());
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad observation JSON: ") + e.what());
    }
}

std::string to_json(const AttackInstance& instance) {
    return instance_to_json(instance).dump(2);
}

std::string to_json(const RecoveryReport& report) {
    json flags = json::array();
    for (const auto flag : report.bounds.flags) flags.push_back(flag_name(flag));
    const json j{{"n", report.n},
                 {"n_clamped", report.n_clamped},
                 {"no_decay", report.no_decay},
                 {"threshold", report.bounds.threshold},
                 {"tail_term", report.error.tail_term},
                 {"noise_term", report.error.noise_term},
                 {"total", report.error.total},
                 {"lower_any_n", report.bounds.lower_any_n},
                 {"lower_at_n", report.bounds.lower_at_n},
                 {"optimality_constant", number_or_null(report.bounds.optimality_constant)},
                 {"ratio_upper_to_lower", report.bounds.ratio_upper_to_lower},
                 {"matched_window_empty", report.bounds.matched_window_empty},
                 {"flags", flags}};
    return j.dump(2);
}

std::string witness_fixture_json(const AttackVerdict& verdict,
                                 const std::vector<AttackInstance>& witnesses) {
    json w = json::array();
    for (const auto& instance : witnesses) w.push_back(instance_to_json(instance));
    const json j{{"verdict",
                  {{"pass", verdict.pass},
                   {"formula_total", verdict.formula_total},
                   {"oracle_value", verdict.oracle_value},
                   {"attainment_gap", verdict.attainment_gap},
                   {"oracle_gap", verdict.oracle_gap},
                   {"random_max", verdict.random_max}}},
                 {"witnesses", w}};
    return j.dump(2);
}

GridFunction read_signal_csv(std::istream& in) {
    std::vector<double> xs;
    std::vector<double> ys;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string x_str, y_str;
        if (!std::getline(row, x_str, ',') || !std::getline(row, y_str)) {
            throw ConfigError("signal CSV rows must be 'x,value'");
        }
        try {
            const double x = std::stod(x_str);
            const double y = std::stod(y_str);
            xs.push_back(x);
            ys.push_back(y);
        } catch (const std::exception&) {
            if (xs.empty()) continue;  // header row
            throw ConfigError("signal CSV rows must be numeric 'x,value'");
        }
    }
    if (xs.size() < 2) throw ConfigError("signal CSV needs at least 2 samples");

    GridFunction g;
    g.samples = ys;
    g.x0 = xs.front();
    const double step = xs[1] - xs[0];
    if (!(step > 0.0)) throw ConfigError("signal grid must be increasing");
    for (std::size_t j = 1; j < xs.size(); ++j) {
        const double expected = g.x0 + step * static_cast<double>(j);
        if (std::abs(xs[j] - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
            throw ConfigError("signal grid must be uniform");
        }
    }
    g.length = step * static_cast<double>(xs.size());
    return g;
}

void write_signal_csv(std::ostream& out, const GridFunction& g) {
    out << "x,value\n";
    for (Index j = 0; j < g.size(); ++j) {
        out << csv_row({format_number(g.x(j)), format_number(g.samples[j])});
    }
}

}  // namespace specrec
