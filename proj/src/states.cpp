#include "urlab/states.hpp"

#include "urlab/linalg.hpp"

#include <cmath>
#include <random>

namespace urlab {

PureState PureState::from_vector(ComplexVector v) {
    if (v.size() < 1) throw InputError("pure state requires dim >= 1");
    if (std::abs(v.norm() - 1.0) > 1e-12)
        throw InputError("pure state amplitudes are not normalized");
    return PureState{std::move(v)};
}

PureState PureState::normalized(ComplexVector v) {
    if (v.size() < 1) throw InputError("pure state requires dim >= 1");
    double n = v.norm();
    if (n == 0.0) throw InputError("cannot normalize the zero vector");
    return PureState{v / n};
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw InputError("density matrix must be square with dim >= 1");
    if (!linalg::is_hermitian(m, 1e-12))
        throw InputError("density matrix is not Hermitian");
    double tr = m.trace().real();
    if (std::abs(tr - 1.0) > 1e-12)
        throw InputError("density matrix trace differs from 1");
    if (!linalg::is_psd(m, 1e-10 * tr))
        throw InputError("density matrix is not positive semidefinite");
    return DensityMatrix{std::move(m)};
}

int state_dim(const State& s) {
    return std::visit([](const auto& v) { return v.dim(); }, s);
}

bool state_is_pure(const State& s) {
    return std::holds_alternative<PureState>(s);
}

ComplexMatrix state_density(const State& s) {
    if (const auto* p = std::get_if<PureState>(&s))
        return p->amps * p->amps.adjoint();
    return std::get<DensityMatrix>(s).rho;
}

OperatorSet OperatorSet::create(std::vector<ComplexMatrix> ops,
                                std::optional<std::vector<bool>> hermitian_flags) {
    if (ops.empty()) throw InputError("operator set must be non-empty");
    const int dim = static_cast<int>(ops[0].rows());
    if (dim < 1) throw InputError("operators require dim >= 1");
    for (const auto& op : ops)
        if (op.rows() != dim || op.cols() != dim)
            throw InputError("all operators must be square with a common dimension");
    std::vector<bool> flags;
    if (hermitian_flags) {
        if (hermitian_flags->size() != ops.size())
            throw InputError("hermitian flag count does not match operator count");
        flags = *hermitian_flags;
        for (std::size_t i = 0; i < ops.size(); ++i)
            if (flags[i] && !linalg::is_hermitian(ops[i], 1e-12))
                throw InputError("operator " + std::to_string(i) +
                                 " is flagged hermitian but is not Hermitian within 1e-12");
    } else {
        flags.reserve(ops.size());
        for (const auto& op : ops)
            flags.push_back(linalg::is_hermitian(op, 1e-12));
    }
    return OperatorSet{dim, std::move(ops), std::move(flags)};
}

void OperatorSet::require_all_hermitian(const std::string& who) const {
    for (std::size_t i = 0; i < hermitian.size(); ++i)
        if (!hermitian[i])
            throw InputError(who + " requires Hermitian operators; operator " +
                             std::to_string(i) + " is not flagged hermitian");
}

namespace states {

ComplexMatrix annihilation_op(int dim) {
    if (dim < 2) throw InputError("annihilation_op requires dim >= 2");
    ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n)
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

std::pair<ComplexMatrix, ComplexMatrix> quadratures(int dim) {
    ComplexMatrix a = annihilation_op(dim);
    ComplexMatrix ad = a.adjoint();
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix q = s * (a + ad);
    ComplexMatrix p = Complex(0, -1) * s * (a - ad);
    return {std::move(q), std::move(p)};
}

std::array<ComplexMatrix, 3> spin_ops(int two_j) {
    if (two_j < 1) throw InputError("spin_ops requires two_j >= 1");
    const int dim = two_j + 1;
    const double j = two_j / 2.0;
    ComplexMatrix jp = ComplexMatrix::Zero(dim, dim); // raising
    ComplexMatrix jz = ComplexMatrix::Zero(dim, dim);
    // basis ordered m = j, j-1, ..., -j
    for (int k = 0; k < dim; ++k) {
        double m = j - k;
        jz(k, k) = m;
        if (k > 0) {
            double mlow = j - k; // J+ |j,mlow> = sqrt(j(j+1) - mlow(mlow+1)) |j,mlow+1>
            jp(k - 1, k) = std::sqrt(j * (j + 1) - mlow * (mlow + 1));
        }
    }
    ComplexMatrix jm = jp.adjoint();
    ComplexMatrix jx = 0.5 * (jp + jm);
    ComplexMatrix jy = Complex(0, -0.5) * (jp - jm);
    return {std::move(jx), std::move(jy), std::move(jz)};
}

PureState fock_state(int n, int dim) {
    if (dim < 1) throw InputError("fock_state requires dim >= 1");
    if (n < 0 || n >= dim)
        throw InputError("fock level " + std::to_string(n) + " out of range for dim " +
                         std::to_string(dim));
    ComplexVector v = ComplexVector::Zero(dim);
    v[n] = 1.0;
    return PureState{std::move(v)};
}

PureState coherent_state(Complex alpha, int dim, bool* truncation_warning) {
    if (dim < 2) throw InputError("coherent_state requires dim >= 2");
    if (truncation_warning)
        *truncation_warning = std::norm(alpha) > dim / 4.0;
    ComplexVector v(dim);
    v[0] = 1.0;
    for (int n = 1; n < dim; ++n)
        v[n] = v[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    return PureState::normalized(std::move(v));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix embed(const ComplexMatrix& op, int mode, const std::vector<int>& mode_dims) {
    if (mode < 0 || mode >= static_cast<int>(mode_dims.size()))
        throw InputError("embed: mode index out of range");
    if (op.rows() != mode_dims[mode] || op.cols() != mode_dims[mode])
        throw InputError("embed: operator dimension does not match mode dimension");
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (int m = 0; m < static_cast<int>(mode_dims.size()); ++m) {
        if (mode_dims[m] < 1) throw InputError("embed: mode dims must be >= 1");
        if (m == mode)
            out = tensor(out, op);
        else
            out = tensor(out, ComplexMatrix::Identity(mode_dims[m], mode_dims[m]));
    }
    return out;
}

namespace {

ComplexMatrix ginibre(int rows, int cols, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            double re = normal(gen);
            double im = normal(gen);
            g(i, j) = Complex(re, im);
        }
    return g;
}

} // namespace

PureState random_pure(int dim, std::uint64_t seed) {
    if (dim < 1) throw InputError("random_pure requires dim >= 1");
    ComplexVector v = ginibre(dim, 1, seed).col(0);
    return PureState::normalized(std::move(v));
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
    if (dim < 1) throw InputError("random_density requires dim >= 1");
    if (rank < 1 || rank > dim)
        throw InputError("random_density rank must lie in 1..dim");
    ComplexMatrix g = ginibre(dim, rank, seed);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint().eval());
    return DensityMatrix{std::move(rho)};
}

ComplexMatrix random_hermitian(int dim, std::uint64_t seed) {
    if (dim < 1) throw InputError("random_hermitian requires dim >= 1");
    ComplexMatrix g = ginibre(dim, dim, seed);
    return 0.5 * (g + g.adjoint().eval());
}

ComplexMatrix random_operator(int dim, std::uint64_t seed) {
    if (dim < 1) throw InputError("random_operator requires dim >= 1");
    return ginibre(dim, dim, seed);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace states
} // namespace urlab
