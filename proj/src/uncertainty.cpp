#include "urlab/uncertainty.hpp"

#include "urlab/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace urlab::uncertainty {

Complex mean(const ComplexMatrix& op, const PureState& psi) {
    if (op.rows() != psi.dim() || op.cols() != psi.dim())
        throw InputError("mean: operator/state dimension mismatch");
    return (psi.amps.adjoint() * (op * psi.amps))(0, 0);
}

Complex mean(const ComplexMatrix& op, const DensityMatrix& rho) {
    if (op.rows() != rho.dim() || op.cols() != rho.dim())
        throw InputError("mean: operator/state dimension mismatch");
    return (op * rho.rho).trace();
}

Complex mean(const ComplexMatrix& op, const State& state) {
    return std::visit([&](const auto& s) { return mean(op, s); }, state);
}

namespace {

std::vector<Complex> shared_means(const OperatorSet& ops, const State& state) {
    std::vector<Complex> c(ops.size());
    for (int j = 0; j < ops.size(); ++j)
        c[j] = mean(ops.ops[j], state);
    return c;
}

ComplexMatrix gram_pure(const OperatorSet& ops, const PureState& psi,
                        const std::vector<Complex>& c) {
    const int n = ops.size();
    std::vector<ComplexVector> chi(n);
    for (int j = 0; j < n; ++j)
        chi[j] = ops.ops[j] * psi.amps - c[j] * psi.amps;
    ComplexMatrix gamma(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            gamma(j, k) = (chi[j].adjoint() * chi[k])(0, 0);
    return gamma;
}

ComplexMatrix gram_mixed_trace(const OperatorSet& ops, const ComplexMatrix& rho,
                               const std::vector<Complex>& c) {
    const int n = ops.size();
    const ComplexMatrix id = ComplexMatrix::Identity(rho.rows(), rho.cols());
    std::vector<ComplexMatrix> a(n), t(n);
    for (int j = 0; j < n; ++j) {
        a[j] = ops.ops[j] - c[j] * id;
        t[j] = a[j] * rho;
    }
    ComplexMatrix gamma(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            // Tr[(Z_k - c_k) rho (Z_j - c_j)†] as a Frobenius pairing
            gamma(j, k) = (a[j].conjugate().cwiseProduct(t[k])).sum();
    return gamma;
}

ComplexMatrix gram_mixed_hs(const OperatorSet& ops, const ComplexMatrix& rho,
                            const std::vector<Complex>& c) {
    const int n = ops.size();
    const ComplexMatrix sqrt_rho = linalg::hermitian_sqrt(rho);
    const ComplexMatrix id = ComplexMatrix::Identity(rho.rows(), rho.cols());
    std::vector<ComplexMatrix> rt(n);
    for (int j = 0; j < n; ++j)
        rt[j] = (ops.ops[j] - c[j] * id) * sqrt_rho;
    ComplexMatrix gamma(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            gamma(j, k) = (rt[j].conjugate().cwiseProduct(rt[k])).sum();
    return gamma;
}

} // namespace

ComplexMatrix gram_robertson(const OperatorSet& ops, const State& state, GramPath path) {
    if (ops.dim != state_dim(state))
        throw InputError("gram_robertson: operator/state dimension mismatch");
    const std::vector<Complex> c = shared_means(ops, state);
    switch (path) {
        case GramPath::PureGram: {
            const auto* psi = std::get_if<PureState>(&state);
            if (!psi)
                throw InputError("gram_robertson: PureGram path requires a pure state");
            return gram_pure(ops, *psi, c);
        }
        case GramPath::MixedTrace:
            return gram_mixed_trace(ops, state_density(state), c);
        case GramPath::MixedHS:
            return gram_mixed_hs(ops, state_density(state), c);
    }
    throw InputError("gram_robertson: unknown path");
}

SKSplit split_sk(const ComplexMatrix& gamma, double herm_tol) {
    if (gamma.rows() != gamma.cols())
        throw InputError("split_sk requires a square matrix");
    double scale = std::max(1.0, gamma.cwiseAbs().maxCoeff());
    if (!linalg::is_hermitian(gamma, herm_tol * scale))
        throw InputError("split_sk requires a Hermitian matrix");
    return SKSplit{gamma.real(), gamma.imag()};
}

Covariance covariance_matrix(const OperatorSet& ops, const State& state) {
    if (ops.dim != state_dim(state))
        throw InputError("covariance_matrix: operator/state dimension mismatch");
    ops.require_all_hermitian("covariance_matrix");
    const int n = ops.size();
    std::vector<double> c(n);
    for (int j = 0; j < n; ++j)
        c[j] = mean(ops.ops[j], state).real();
    // Explicit products X_j X_k; means of the symmetrized/antisymmetrized
    // combinations give sigma and kappa directly.
    RealMatrix sigma(n, n), kappa(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            Complex pjk = mean(ops.ops[j] * ops.ops[k], state);
            Complex pkj = (k == j) ? pjk : mean(ops.ops[k] * ops.ops[j], state);
            sigma(j, k) = 0.5 * (pjk + pkj).real() - c[j] * c[k];
            sigma(k, j) = sigma(j, k);
            double kv = (Complex(0, -0.5) * (pjk - pkj)).real();
            kappa(j, k) = kv;
            kappa(k, j) = -kv;
        }
        kappa(j, j) = 0.0;
    }
    return Covariance{std::move(sigma), std::move(kappa)};
}

UncertaintyData uncertainty_data(const OperatorSet& ops, const State& state, GramPath path) {
    UncertaintyData out;
    out.n = ops.size();
    out.means = shared_means(ops, state);
    out.gamma = gram_robertson(ops, state, path);
    SKSplit sk = split_sk(out.gamma);
    out.s = std::move(sk.s);
    out.k = std::move(sk.k);
    return out;
}

} // namespace urlab::uncertainty
