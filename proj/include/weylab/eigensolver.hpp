#pragma once

#include <Eigen/SparseCore>
#include <cstdint>
#include <vector>

namespace weylab {

struct LanczosOptions {
    double residual_tol = 1e-9;  // relative to a Gershgorin bound on the matrix norm
    std::uint64_t seed = 0x5eed1234ULL;
    int max_runs = 200;
};

struct EigenResult {
    std::vector<double> values;  // ascending
    int runs = 0;
    double max_residual = 0.0;
};

// Smallest k eigenvalues of a symmetric positive definite sparse matrix. Shift-invert at 0
// with a sparse LDL^T factorization, full reorthogonalization, and locking of converged
// pairs; restarted until a run finds nothing new below the current k-th value.
EigenResult smallest_eigenvalues(const Eigen::SparseMatrix<double>& A, int k, const LanczosOptions& opts = {});

}  // namespace weylab
