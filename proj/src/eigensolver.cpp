#include "weylab/eigensolver.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "weylab/errors.hpp"

namespace weylab {

namespace {

double gershgorin_norm(const Eigen::SparseMatrix<double>& A) {
    Eigen::VectorXd rows = Eigen::VectorXd::Zero(A.rows());
    for (int c = 0; c < A.outerSize(); ++c)
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, c); it; ++it) rows[it.row()] += std::abs(it.value());
    return rows.maxCoeff();
}

// Removes components along the locked vectors and the current basis, twice for stability.
void orthogonalize(Eigen::VectorXd& v, const std::vector<Eigen::VectorXd>& locked, const Eigen::MatrixXd& Q, int cols) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& u : locked) v -= u.dot(v) * u;
        if (cols > 0) v -= Q.leftCols(cols) * (Q.leftCols(cols).transpose() * v);
    }
}

}  // namespace

EigenResult smallest_eigenvalues(const Eigen::SparseMatrix<double>& A, int k, const LanczosOptions& opts) {
    const int n = static_cast<int>(A.rows());
    require(A.rows() == A.cols(), "smallest_eigenvalues: matrix must be square");
    require(k >= 1 && k <= n, "smallest_eigenvalues: k out of range");
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(A);
    if (ldlt.info() != Eigen::Success) fail(ErrorKind::Convergence, "smallest_eigenvalues: factorization failed");
    const double anorm = gershgorin_norm(A);
    const double tol = opts.residual_tol * anorm;

    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss;
    std::vector<Eigen::VectorXd> locked;
    std::vector<double> locked_vals;
    EigenResult result;
    int krylov = std::min(n, std::max(2 * k + 20, 40));

    for (int run = 0; run < opts.max_runs; ++run) {
        result.runs = run + 1;
        const int avail = n - static_cast<int>(locked.size());
        if (avail <= 0) break;
        const int m = std::min(krylov, avail);
        Eigen::MatrixXd Q(n, m);
        std::vector<double> alpha, beta;
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = gauss(rng);
        orthogonalize(v, locked, Q, 0);
        v.normalize();
        int steps = 0;
        for (int j = 0; j < m; ++j) {
            Q.col(j) = v;
            Eigen::VectorXd w = ldlt.solve(v);
            for (const auto& u : locked) w -= u.dot(w) * u;
            const double a = v.dot(w);
            alpha.push_back(a);
            orthogonalize(w, locked, Q, j + 1);
            steps = j + 1;
            const double b = w.norm();
            if (j + 1 == m || b < 1e-14 * std::abs(a)) break;
            beta.push_back(b);
            v = w / b;
        }
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(steps, steps);
        for (int i = 0; i < steps; ++i) {
            T(i, i) = alpha[i];
            if (i + 1 < steps) T(i, i + 1) = T(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
        const double kth_before =
            locked_vals.size() >= static_cast<std::size_t>(k)
                ? [&] {
                      std::vector<double> s = locked_vals;
                      std::nth_element(s.begin(), s.begin() + (k - 1), s.end());
                      return s[k - 1];
                  }()
                : std::numeric_limits<double>::infinity();
        bool found_below = false;
        bool top_converged = false;
        // Ritz values of the inverse in descending order correspond to ascending eigenvalues of A.
        for (int i = steps - 1; i >= 0; --i) {
            const double theta = es.eigenvalues()[i];
            if (theta <= 0.0) continue;
            const double lam = 1.0 / theta;
            Eigen::VectorXd x = Q.leftCols(steps) * es.eigenvectors().col(i);
            for (const auto& u : locked) x -= u.dot(x) * u;
            const double xn = x.norm();
            if (xn < 0.5) continue;
            x /= xn;
            const double res = (A * x - lam * x).norm();
            if (res > tol) continue;
            if (i == steps - 1) top_converged = true;
            locked.push_back(x);
            locked_vals.push_back(lam);
            result.max_residual = std::max(result.max_residual, res);
            if (lam < kth_before) found_below = true;
        }
        if (!top_converged) krylov = std::min(n, 2 * krylov);
        if (locked_vals.size() >= static_cast<std::size_t>(k) && top_converged && !found_below &&
            std::isfinite(kth_before))
            break;
        if (static_cast<int>(locked.size()) >= n) break;
        if (run + 1 == opts.max_runs) {
            std::ostringstream os;
            os << "smallest_eigenvalues: not certified after " << opts.max_runs << " runs";
            fail(ErrorKind::Convergence, os.str());
        }
    }
    std::sort(locked_vals.begin(), locked_vals.end());
    if (locked_vals.size() < static_cast<std::size_t>(k))
        fail(ErrorKind::Convergence, "smallest_eigenvalues: fewer converged pairs than requested");
    result.values.assign(locked_vals.begin(), locked_vals.begin() + k);
    return result;
}

}  // namespace weylab
