#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "specrec/rate.hpp"

namespace specrec {

/// Parsed run configuration. The on-disk format is flat `key = value` text
/// with `#` comments; sequence rules are written as nested tags, e.g.
/// `mu = power_paired(2)` or `xi = general_form(c=1, eta=0, alpha=1, beta=0.5)`.
/// Unknown keys are rejected. See the CLI README for the full schema.
struct RunConfig {
    enum class Family { NumDiff, Heat, Custom };

    int schema_version = 1;
    Family family = Family::NumDiff;

    // numdiff: smoothness exponent of xi; heat: exponent of lambda_k = k^gamma
    double gamma = 4.0;

    // heat only
    double t = 0.0;
    double T = 1.0;
    double s = 0.0;

    // custom family only
    std::optional<SequenceRule> mu_rule;
    std::optional<SequenceRule> xi_rule;
    std::optional<RatioCertificate> certificate;

    Index horizon = 4096;
    std::vector<double> deltas;
    SelectionStrategy strategy = MatchedDecay{1.0};
    double match_constant = 1.0;
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    std::vector<double> qs;
    std::optional<double> chi;
    std::optional<double> measure_q;
    Index grid_samples = 4096;
    double small_delta_c = 1.0;

    /// The spectral problem this configuration describes.
    SpectralProblem build_problem() const;

    /// The sweep application; throws ConfigError for Family::Custom.
    RateApplication build_application() const;

    RateOptions rate_options() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& file);

/// Parses one rule tag such as `power(4)`; exposed for tests.
SequenceRule parse_rule_tag(const std::string& tag);

}  // namespace specrec
