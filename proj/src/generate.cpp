#include "adjkit/generate.hpp"

#include <algorithm>

namespace adjkit {

namespace {

long rand_int(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace

ExactMatrix random_int_matrix(Rng& rng, int rows, int cols, int lo, int hi) {
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = RationalComplex(rand_int(rng, lo, hi));
    return m;
}

UnimodularPair random_unimodular(Rng& rng, int n, int op_count, int max_entry) {
    if (op_count <= 0) op_count = 2 * n + 2;
    UnimodularPair p{ExactMatrix::identity(n), ExactMatrix::identity(n)};
    if (n == 1) {
        if (rand_int(rng, 0, 1) == 1) {
            p.s(0, 0) = RationalComplex(-1);
            p.s_inv(0, 0) = RationalComplex(-1);
        }
        return p;
    }
    for (int op = 0; op < op_count; ++op) {
        const int kind = static_cast<int>(rand_int(rng, 0, 9));
        const int i = static_cast<int>(rand_int(rng, 0, n - 1));
        int j = static_cast<int>(rand_int(rng, 0, n - 2));
        if (j >= i) ++j;
        if (kind < 8) {
            long c = rand_int(rng, 1, 2);
            if (rand_int(rng, 0, 1) == 1) c = -c;
            const RationalComplex rc(c);
            // row_i += c * row_j on S; col_j -= c * col_i on S^-1.
            for (int t = 0; t < n; ++t) p.s(i, t) += rc * p.s(j, t);
            for (int t = 0; t < n; ++t) p.s_inv(t, j) -= rc * p.s_inv(t, i);
            if (p.s.max_abs() > max_entry || p.s_inv.max_abs() > max_entry) {
                for (int t = 0; t < n; ++t) p.s(i, t) -= rc * p.s(j, t);
                for (int t = 0; t < n; ++t) p.s_inv(t, j) += rc * p.s_inv(t, i);
            }
        } else if (kind == 8) {
            for (int t = 0; t < n; ++t) std::swap(p.s(i, t), p.s(j, t));
            for (int t = 0; t < n; ++t) std::swap(p.s_inv(t, i), p.s_inv(t, j));
        } else {
            for (int t = 0; t < n; ++t) p.s(i, t) = -p.s(i, t);
            for (int t = 0; t < n; ++t) p.s_inv(t, i) = -p.s_inv(t, i);
        }
    }
    return p;
}

ExactMatrix planted_rank_matrix(Rng& rng, int n, int target_rank) {
    if (target_rank < 0 || target_rank > n)
        throw DomainError("planted_rank_matrix: rank out of range");
    const UnimodularPair p = random_unimodular(rng, n);
    const UnimodularPair q = random_unimodular(rng, n);
    ExactMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RationalComplex sum;
            for (int t = 0; t < target_rank; ++t) sum += p.s(i, t) * q.s(t, j);
            a(i, j) = sum;
        }
    return a;
}

PlantedSpectrum planted_spectrum_matrix(Rng& rng, int n, int multiplicity) {
    if (multiplicity < 1 || multiplicity > n)
        throw DomainError("planted_spectrum_matrix: multiplicity out of range");
    PlantedSpectrum out;
    const long lambda = rand_int(rng, -4, 4);
    out.lambda = RationalComplex(lambda);
    out.multiplicity = multiplicity;
    std::vector<long> pool;
    for (long v = -9; v <= 9; ++v)
        if (v != lambda) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    out.other_eigenvalues.assign(pool.begin(), pool.begin() + (n - multiplicity));

    ExactMatrix d(n, n);
    for (int i = 0; i < multiplicity; ++i) d(i, i) = out.lambda;
    for (int i = multiplicity; i < n; ++i)
        d(i, i) = RationalComplex(out.other_eigenvalues[static_cast<std::size_t>(i - multiplicity)]);
    // Gentle conjugation: wilder transforms are exact-mode fine but drown the
    // floating pipeline in conditioning noise.
    const UnimodularPair s = random_unimodular(rng, n, n + 2, 12);
    out.a = s.s * d * s.s_inv;
    return out;
}

PlantedJordan jordan_embedded_matrix(Rng& rng, int n, int block_size) {
    if (block_size < 2 || block_size > n)
        throw DomainError("jordan_embedded_matrix: block size must be in [2, n]");
    PlantedJordan out;
    const long lambda = rand_int(rng, -4, 4);
    out.lambda = RationalComplex(lambda);
    out.block_size = block_size;

    ExactMatrix m(n, n);
    for (int i = 0; i < block_size; ++i) {
        m(i, i) = out.lambda;
        if (i + 1 < block_size) m(i, i + 1) = RationalComplex(1);
    }
    std::vector<long> pool;
    for (long v = -9; v <= 9; ++v)
        if (v != lambda) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int i = block_size; i < n; ++i)
        m(i, i) = RationalComplex(pool[static_cast<std::size_t>(i - block_size)]);

    const UnimodularPair s = random_unimodular(rng, n, n + 2, 12);
    out.a = s.s * m * s.s_inv;
    return out;
}

FloatMatrix random_hermitian(Rng& rng, int n, bool complex_entries) {
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    FloatMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = Complex(dist(rng), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex v(dist(rng), complex_entries ? dist(rng) : 0.0);
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    return a;
}

FloatMatrix to_float(const ExactMatrix& a) {
    FloatMatrix f(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) f(i, j) = a(i, j).to_complex();
    return f;
}

}  // namespace adjkit
