#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adjkit/io.hpp"

namespace adjkit {

/// Options for the randomized identity suite.
struct VerifyOptions {
    int trials = 25;
    int dim_max = 5;
    std::uint64_t seed = 271828;
    /// Perturb one entry of each primary matrix after construction; the
    /// negative control that must make the suite fail.
    bool corrupt = false;
    TolerancePolicy tol{};
    /// Stopping tolerance handed to the root finder in floating checks.
    double root_tol = 1e-13;
};

/// Aggregated result of one named identity across all trials.
struct IdentityReport {
    std::string name;
    int checks = 0;
    double max_residual = 0.0;
    /// Allowed residual; 0 for exact-kernel identities.
    double tolerance = 0.0;
    bool pass = true;
    std::string note;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    int trials = 0;
    int dim_max = 0;
    bool corrupt = false;
    std::vector<IdentityReport> identities;

    bool pass() const {
        for (const auto& r : identities)
            if (!r.pass) return false;
        return true;
    }
};

/// Randomized identity suite over seeded families (exact kernel) plus
/// floating-kernel derivative/recovery/Hermitian checks.
VerifyReport run_verify(const VerifyOptions& opts);

/// Identity suite pinned to one parsed matrix; the partner matrices any
/// two-sided identity needs are drawn from the seeded generator.
VerifyReport run_verify_on(const AnyMatrix& m, const VerifyOptions& opts);

}  // namespace adjkit
