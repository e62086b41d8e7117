#pragma once

#include "urlab/types.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <variant>

namespace urlab {

// Normalized state vector. from_vector enforces unit norm (1e-12);
// normalized() rescales arbitrary non-zero input.
struct PureState {
    ComplexVector amps;

    int dim() const { return static_cast<int>(amps.size()); }
    static PureState from_vector(ComplexVector v);
    static PureState normalized(ComplexVector v);
};

// Trace-one Hermitian PSD matrix. from_matrix enforces Hermiticity and
// trace within 1e-12 and eigenvalues >= -1e-10 * trace.
struct DensityMatrix {
    ComplexMatrix rho;

    int dim() const { return static_cast<int>(rho.rows()); }
    static DensityMatrix from_matrix(ComplexMatrix m);
};

using State = std::variant<PureState, DensityMatrix>;

int state_dim(const State& s);
bool state_is_pure(const State& s);
// Projector |psi><psi| for pure input, the stored matrix otherwise.
ComplexMatrix state_density(const State& s);

// Named operator list over one Hilbert space. Hermitian flags are validated
// against the entries (1e-12) when supplied, detected otherwise.
struct OperatorSet {
    int dim = 0;
    std::vector<ComplexMatrix> ops;
    std::vector<bool> hermitian;

    int size() const { return static_cast<int>(ops.size()); }
    static OperatorSet create(std::vector<ComplexMatrix> ops,
                              std::optional<std::vector<bool>> hermitian_flags = std::nullopt);
    void require_all_hermitian(const std::string& who) const;
};

namespace states {

// Bosonic ladder operator on a truncated Fock space: a|n> = sqrt(n)|n-1>.
ComplexMatrix annihilation_op(int dim);

// q = (a + a†)/sqrt(2), p = -i(a - a†)/sqrt(2), so [q,p] = i away from the
// truncation edge (hbar = 1 throughout).
std::pair<ComplexMatrix, ComplexMatrix> quadratures(int dim);

// Spin components (J_x, J_y, J_z) for spin j = two_j/2, dim = two_j + 1.
std::array<ComplexMatrix, 3> spin_ops(int two_j);

PureState fock_state(int n, int dim);

// Truncated coherent state, renormalized. When |alpha|^2 > dim/4 the
// truncation is judged too lossy and *truncation_warning is set (the state
// is still returned; this is a warning, not an error).
PureState coherent_state(Complex alpha, int dim, bool* truncation_warning = nullptr);

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// op acting on factor `mode` of a tensor product with the given local dims.
ComplexMatrix embed(const ComplexMatrix& op, int mode, const std::vector<int>& mode_dims);

// Seeded ensembles. Same seed, same output, no hidden state.
PureState random_pure(int dim, std::uint64_t seed);                 // Haar (normalized Ginibre vector)
DensityMatrix random_density(int dim, int rank, std::uint64_t seed); // GG†/tr(GG†), G dim x rank Ginibre
ComplexMatrix random_hermitian(int dim, std::uint64_t seed);         // (G + G†)/2
ComplexMatrix random_operator(int dim, std::uint64_t seed);          // plain Ginibre

// splitmix64-style hash for per-trial sub-seeds: decorrelates (seed, index)
// so parallel fuzz trials are reproducible independent of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

} // namespace states
} // namespace urlab
