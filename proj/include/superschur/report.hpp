#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superschur {

using Rational = boost::multiprecision::cpp_rational;

/// Outcome of a multi-check verification run. Checks and counts keep their
/// insertion order so serialized reports are stable.
struct VerificationReport {
    std::vector<std::pair<std::string, bool>> checks;
    std::optional<std::vector<Rational>> counterexample;
    std::vector<std::pair<std::string, long long>> counts;
    double elapsed_ms = 0.0;

    bool all_pass() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

/// Result of certifying the stacked hook-system matrix: the row-sign
/// normalization must produce a {0,1} interval matrix, and (when the
/// dimension is within the cap) the exhaustive minor test must agree.
struct CertReport {
    bool zero_one_pass = false;
    bool interval_pass = false;
    bool exhaustive_checked = false;
    bool exhaustive_pass = false;
    int rows = 0;
    int cols = 0;
    double elapsed_ms = 0.0;

    bool certified() const {
        return zero_one_pass && interval_pass && (!exhaustive_checked || exhaustive_pass);
    }
};

} // namespace superschur
