#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "adjkit/matrix.hpp"

namespace adjkit {

/// All random test families are driven by one seeded engine so that runs
/// reproduce bit-for-bit.
using Rng = std::mt19937_64;

/// Uniform integer entries in [lo, hi], exact kernel.
ExactMatrix random_int_matrix(Rng& rng, int rows, int cols, int lo = -5, int hi = 5);

/// Integer matrix with det = +-1 together with its exact inverse, built from
/// elementary row operations (shears, swaps, sign flips).
struct UnimodularPair {
    ExactMatrix s;
    ExactMatrix s_inv;
};
UnimodularPair random_unimodular(Rng& rng, int n, int op_count = 0, int max_entry = 40);

/// P * diag(1,...,1,0,...,0) * Q with unimodular P, Q: rank is exactly
/// target_rank.
ExactMatrix planted_rank_matrix(Rng& rng, int n, int target_rank);

/// Diagonalizable integer-similar matrix with one eigenvalue of planted
/// multiplicity (geometric = algebraic = multiplicity).
struct PlantedSpectrum {
    ExactMatrix a;
    RationalComplex lambda;
    int multiplicity = 0;
    std::vector<long> other_eigenvalues;
};
PlantedSpectrum planted_spectrum_matrix(Rng& rng, int n, int multiplicity);

/// Similarity embedding of a single Jordan block J_m(lambda) next to distinct
/// simple eigenvalues: lambda is defective with geometric multiplicity 1.
struct PlantedJordan {
    ExactMatrix a;
    RationalComplex lambda;
    int block_size = 0;
};
PlantedJordan jordan_embedded_matrix(Rng& rng, int n, int block_size);

/// Random Hermitian matrix (real symmetric when complex_entries is false).
FloatMatrix random_hermitian(Rng& rng, int n, bool complex_entries);

FloatMatrix to_float(const ExactMatrix& a);

}  // namespace adjkit
