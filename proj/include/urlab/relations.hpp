#pragma once

#include "urlab/uncertainty.hpp"

#include <array>
#include <optional>
#include <utility>

namespace urlab::relations {

enum class RelationId {
    RUR,                 // det sigma >= det kappa
    SUR,                 // variance product vs squared commutator mean
    EUR1,                // C_r of summed sigma vs C_r of summed kappa
    EUR2,                // C_r superadditivity over Gram matrices
    MINOR_SIGMA_KAPPA,   // principal minor line of EUR1
    MINOR_GRAM_SUPERADD, // principal minor line of EUR2
    SHEUR,               // strengthened two-state UR
    NEWUR,               // two-mode quadrature inequality
    DETS_DETK,           // det S >= det K for the two-mode pair (a1, a2)
};

const char* relation_name(RelationId id);
std::optional<RelationId> relation_from_name(const std::string& name);

struct URVerdict {
    RelationId relation{};
    std::optional<int> order;        // coefficient order r, when applicable
    std::optional<IndexSet> indices; // minor index set, when applicable
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double scale = 1.0; // max(1, |lhs|, |rhs|)
    bool pass = false;
};

URVerdict make_verdict(RelationId id, double lhs, double rhs, double tol,
                       std::optional<int> order = std::nullopt,
                       std::optional<IndexSet> indices = std::nullopt);

// Operator set plus the states it is evaluated in. All checkers validate
// dimensional consistency through here.
struct MultiStateInput {
    OperatorSet ops;
    std::vector<State> states;

    static MultiStateInput create(OperatorSet ops, std::vector<State> states);
};

// det sigma >= det kappa for a single state (Hermitian operators).
URVerdict check_robertson(const MultiStateInput& input, double tol = kDefaultTol);

// (dX)^2 (dY)^2 - (dXY)^2 >= |<[X,Y]>|^2 / 4.
URVerdict check_schrodinger(const ComplexMatrix& x, const ComplexMatrix& y,
                            const State& state, double tol = kDefaultTol);

// C_r(sum_mu sigma_mu) >= C_r(sum_mu kappa_mu). With one state and r = n
// this reduces to check_robertson.
URVerdict check_char_ur_multistate(const MultiStateInput& input, int r,
                                   double tol = kDefaultTol);

// C_r(sum_mu Gamma_mu) >= sum_mu C_r(Gamma_mu) for Hermitian PSD matrices.
URVerdict check_gram_superadditivity(const std::vector<ComplexMatrix>& gammas, int r,
                                     double tol = kDefaultTol);

// C_r(Re sum Gamma_mu) >= C_r(Im sum Gamma_mu); the EUR1 statement carried by
// the S/K split of an arbitrary (possibly non-Hermitian-operator) Gram sum.
URVerdict check_char_ur_gram(const std::vector<ComplexMatrix>& gammas, int r,
                             double tol = kDefaultTol);

// Principal-minor lines: first the sigma/kappa minor inequality on summed
// matrices, second the superadditivity of the same minor over R_mu =
// sigma_mu + i kappa_mu.
std::pair<URVerdict, URVerdict> check_minor_urs(const MultiStateInput& input,
                                                const IndexSet& idx,
                                                double tol = kDefaultTol);

// Same two minor lines evaluated directly on supplied Gram matrices.
std::pair<URVerdict, URVerdict> check_minor_gram(const std::vector<ComplexMatrix>& gammas,
                                                 const IndexSet& idx,
                                                 double tol = kDefaultTol);

// [ (dX_1)^2 (dY_2)^2 + (dX_2)^2 (dY_1)^2 ] / 2 - |dXY_1 dXY_2|
//   >= |<[X,Y]>_1 <[X,Y]>_2| / 4.
// With identical states the margin coincides with check_schrodinger's.
URVerdict check_entangled_pair(const ComplexMatrix& x, const ComplexMatrix& y,
                               const State& state1, const State& state2,
                               double tol = kDefaultTol);

struct TwoModeResult {
    URVerdict new_ur;      // quadrature-variance inequality
    URVerdict det_s_det_k; // det S >= det K on the symmetrized (a1, a2) Gram
    double det_s_residual = 0.0; // |det S - closed form from quadrature covariances|
    double det_k_residual = 0.0; // |det K - closed form from quadrature covariances|
};

// Two-mode check on state over mode_dims = {d1, d2}. The Gram matrix of
// (a1, a2) is anticommutator-symmetrized, (Gamma + Gamma'^T)/2 with Gamma'
// the adjoint-set Gram; its S/K parts then equal
//   S_jk = (dq_j q_k + dp_j p_k)/2,  K_jk = (dq_j p_k - dq_k p_j)/2
// exactly, which is what the residuals verify against the independent
// covariance_matrix route. NEWUR's margin is 4x the det margin.
TwoModeResult check_two_mode_new_ur(const State& state, const std::array<int, 2>& mode_dims,
                                    double tol = kDefaultTol);

} // namespace urlab::relations
