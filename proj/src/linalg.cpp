#include "urlab/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace urlab::linalg {

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_psd(const ComplexMatrix& m, double tol) {
    if (!is_hermitian(m, tol)) return false;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

Complex determinant(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw InputError("determinant requires a square matrix of dim >= 1");
    const Eigen::Index n = m.rows();
    ComplexMatrix a = m;
    Complex det = 1.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = k;
        double best = std::abs(a(k, k));
        for (Eigen::Index i = k + 1; i < n; ++i) {
            double v = std::abs(a(i, k));
            if (v > best) { best = v; pivot = i; }
        }
        if (best == 0.0) return 0.0;
        if (pivot != k) {
            a.row(pivot).swap(a.row(k));
            det = -det;
        }
        det *= a(k, k);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            Complex f = a(i, k) / a(k, k);
            a.row(i).tail(n - k) -= f * a.row(k).tail(n - k);
        }
    }
    return det;
}

Complex principal_minor(const ComplexMatrix& m, const IndexSet& idx) {
    if (m.rows() != m.cols())
        throw InputError("principal_minor requires a square matrix");
    idx.validate(static_cast<int>(m.rows()));
    const int r = idx.order();
    ComplexMatrix sub(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            sub(i, j) = m(idx.indices[i] - 1, idx.indices[j] - 1);
    return determinant(sub);
}

std::vector<IndexSet> index_sets_of_order(int n, int r) {
    if (r < 1 || r > n)
        throw InputError("minor order must lie in 1..dim");
    std::vector<IndexSet> out;
    std::vector<int> comb(r);
    for (int i = 0; i < r; ++i) comb[i] = i + 1;
    while (true) {
        out.push_back(IndexSet(comb));
        int i = r - 1;
        while (i >= 0 && comb[i] == n - r + i + 1) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

std::vector<Complex> char_coeffs(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw InputError("char_coeffs requires a square matrix of dim >= 1");
    const int n = static_cast<int>(m.rows());
    std::vector<Complex> coeffs(n);
    for (int r = 1; r <= n; ++r) {
        Complex sum = 0.0;
        for (const IndexSet& idx : index_sets_of_order(n, r))
            sum += principal_minor(m, idx);
        coeffs[r - 1] = sum;
    }
    return coeffs;
}

std::vector<double> char_coeffs_hermitian(const ComplexMatrix& m) {
    RealVector eigs = hermitian_eigenvalues(m);
    const int n = static_cast<int>(eigs.size());
    // e_r via the standard one-pass recurrence over eigenvalues.
    std::vector<double> e(n + 1, 0.0);
    e[0] = 1.0;
    for (int i = 0; i < n; ++i)
        for (int r = std::min(i + 1, n); r >= 1; --r)
            e[r] += eigs[i] * e[r - 1];
    return std::vector<double>(e.begin() + 1, e.end());
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw InputError("eigenvalues require a square matrix of dim >= 1");
    if (!is_hermitian(m, 1e-10 * std::max(1.0, m.cwiseAbs().maxCoeff())))
        throw InputError("matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& rho) {
    if (rho.rows() != rho.cols() || rho.rows() < 1)
        throw InputError("hermitian_sqrt requires a square matrix of dim >= 1");
    if (!is_hermitian(rho, 1e-10 * std::max(1.0, rho.cwiseAbs().maxCoeff())))
        throw InputError("hermitian_sqrt requires a Hermitian matrix");
    const double eps_clamp = 1e-10 * std::abs(rho.trace());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho);
    RealVector lam = es.eigenvalues();
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam[i] < -eps_clamp)
            throw InputError("hermitian_sqrt: eigenvalue " + std::to_string(lam[i]) +
                             " below -eps_clamp, matrix is not PSD");
        if (lam[i] < 0.0) lam[i] = 0.0;
    }
    ComplexMatrix q = es.eigenvectors() *
                      lam.cwiseSqrt().asDiagonal() *
                      es.eigenvectors().adjoint();
    return 0.5 * (q + q.adjoint().eval());
}

} // namespace urlab::linalg
