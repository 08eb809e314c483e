#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieball/table.hpp"

namespace lieball {

struct VerifyOptions {
    int m = 2;
    int max_l = 6;
    std::uint64_t seed = 0;
    /// Grid bound for the lemma scan; 0 picks min(max(max_l, 1), 3).
    int lemma_bound = 0;
    /// Random polynomials for the [Laplacian, L_ab] = 0 check.
    int invariance_trials = 8;
    /// Replaces rho_c in the Blattner evaluation. Only for exercising the
    /// failure path; the genuine run leaves it empty.
    std::optional<std::vector<int>> rho_c_override;
};

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    bool pass = true;
    std::vector<CheckResult> checks;
    KTypeTable blattner;
    KTypeTable harmonic;
    std::optional<TableDifference> first_difference;
};

/// Computes the Blattner table at lambda = m - 1 and the Laplacian-kernel table
/// up to degree max_l, compares them entry by entry, and runs the supporting
/// checks (lemma scan, range verdict, Verma/orbit sweep, so(2m)-equivariance of
/// the Laplacian). Throws harmonic::CertificationError if the harmonic table
/// cannot be certified.
VerifyReport verify(const VerifyOptions& options);

}  // namespace lieball
