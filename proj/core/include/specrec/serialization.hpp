#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "specrec/applications.hpp"

namespace specrec {

/// Index/value records: {"coeffs": [[k, v], ...]}.
std::string to_json(const CoefficientVector& v);
CoefficientVector coefficient_vector_from_json(const std::string& text);

/// {"delta": d, "coeffs": [[k, v], ...]}.
std::string to_json(const NoisyObservation& obs);
NoisyObservation observation_from_json(const std::string& text);

std::string to_json(const AttackInstance& instance);
std::string to_json(const RecoveryReport& report);

/// Regression fixture bundling the extremal witnesses and the verdict.
std::string witness_fixture_json(const AttackVerdict& verdict,
                                 const std::vector<AttackInstance>& witnesses);

/// Signal I/O as CSV rows "x,value".
GridFunction read_signal_csv(std::istream& in);
void write_signal_csv(std::ostream& out, const GridFunction& g);

std::string flag_name(OptimalityFlag flag);

}  // namespace specrec
