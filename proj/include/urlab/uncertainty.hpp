#pragma once

#include "urlab/states.hpp"
#include "urlab/types.hpp"

namespace urlab::uncertainty {

Complex mean(const ComplexMatrix& op, const PureState& psi);
Complex mean(const ComplexMatrix& op, const DensityMatrix& rho);
Complex mean(const ComplexMatrix& op, const State& state);

enum class GramPath {
    PureGram,   // <(Z_j - <Z_j>)psi | (Z_k - <Z_k>)psi>, pure states only
    MixedTrace, // Tr[(Z_k - <Z_k>) rho (Z_j - <Z_j>)†]
    MixedHS,    // Frobenius inner products of (Z_j - <Z_j>) sqrt(rho)
};

// Gram matrix of centered operators in a state. All three paths agree in
// exact arithmetic; they exist to cross-check each other. Means are computed
// once and shared across entries. PureGram never forms operator-operator
// products, only operator-vector applications.
ComplexMatrix gram_robertson(const OperatorSet& ops, const State& state, GramPath path);

struct SKSplit {
    RealMatrix s; // Re(gamma), symmetric
    RealMatrix k; // Im(gamma), antisymmetric
};

// Entrywise real/imaginary split of a Hermitian Gram matrix, so that
// gamma = s + i k reconstructs exactly. Rejects non-Hermitian input.
SKSplit split_sk(const ComplexMatrix& gamma, double herm_tol = 1e-12);

struct Covariance {
    RealMatrix sigma; // sigma_jk = <X_j X_k + X_k X_j>/2 - <X_j><X_k>
    RealMatrix kappa; // kappa_jk = (-i/2) <[X_j, X_k]>
};

// Symmetrized covariance and mean-commutator matrices for Hermitian operator
// sets, built from explicit operator products (independent of the Gram
// route; sigma + i kappa equals gram_robertson for Hermitian sets).
Covariance covariance_matrix(const OperatorSet& ops, const State& state);

// Bundle returned to callers that need every uncertainty object at once.
struct UncertaintyData {
    int n = 0;
    ComplexMatrix gamma;
    RealMatrix s;
    RealMatrix k;
    std::vector<Complex> means;
};

UncertaintyData uncertainty_data(const OperatorSet& ops, const State& state, GramPath path);

} // namespace urlab::uncertainty
