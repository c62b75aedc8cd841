#pragma once

#include <stdexcept>
#include <string>

namespace specrec {

/// A sequence was evaluated past its tabulated horizon and has no
/// continuation rule, or a scan ran out of indices before its stopping
/// condition was met.
struct HorizonError : std::runtime_error {
    explicit HorizonError(const std::string& what) : std::runtime_error(what) {}
};

/// The supremum of mu_k/xi_k over an infinite tail cannot be certified:
/// no monotonicity certificate and no usable continuation of the data.
struct UncertifiedTailError : std::runtime_error {
    explicit UncertifiedTailError(const std::string& what) : std::runtime_error(what) {}
};

/// The norm-equivalence constants of the Banach-space bounds cannot be
/// certified for the given sequences (tail sums not provably convergent).
struct CertificationError : std::runtime_error {
    explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed run configuration (unknown key, bad rule tag, missing field).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace specrec
