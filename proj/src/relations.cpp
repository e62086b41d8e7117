#include "urlab/relations.hpp"

#include "urlab/linalg.hpp"

#include <cmath>

namespace urlab::relations {

using uncertainty::Covariance;
using uncertainty::GramPath;
using uncertainty::covariance_matrix;
using uncertainty::gram_robertson;
using uncertainty::split_sk;

const char* relation_name(RelationId id) {
    switch (id) {
        case RelationId::RUR: return "RUR";
        case RelationId::SUR: return "SUR";
        case RelationId::EUR1: return "EUR1";
        case RelationId::EUR2: return "EUR2";
        case RelationId::MINOR_SIGMA_KAPPA: return "MINOR_SIGMA_KAPPA";
        case RelationId::MINOR_GRAM_SUPERADD: return "MINOR_GRAM_SUPERADD";
        case RelationId::SHEUR: return "SHEUR";
        case RelationId::NEWUR: return "NEWUR";
        case RelationId::DETS_DETK: return "DETS_DETK";
    }
    return "UNKNOWN";
}

std::optional<RelationId> relation_from_name(const std::string& name) {
    for (RelationId id : {RelationId::RUR, RelationId::SUR, RelationId::EUR1,
                          RelationId::EUR2, RelationId::MINOR_SIGMA_KAPPA,
                          RelationId::MINOR_GRAM_SUPERADD, RelationId::SHEUR,
                          RelationId::NEWUR, RelationId::DETS_DETK})
        if (name == relation_name(id)) return id;
    return std::nullopt;
}

URVerdict make_verdict(RelationId id, double lhs, double rhs, double tol,
                       std::optional<int> order, std::optional<IndexSet> indices) {
    if (!std::isfinite(lhs) || !std::isfinite(rhs))
        throw std::logic_error("verdict sides must be finite");
    URVerdict v;
    v.relation = id;
    v.order = order;
    v.indices = std::move(indices);
    v.lhs = lhs;
    v.rhs = rhs;
    v.margin = lhs - rhs;
    v.scale = margin_scale(lhs, rhs);
    v.pass = v.margin >= -tol * v.scale;
    return v;
}

MultiStateInput MultiStateInput::create(OperatorSet ops, std::vector<State> states) {
    if (states.empty())
        throw InputError("MultiStateInput requires at least one state");
    for (const State& s : states)
        if (state_dim(s) != ops.dim)
            throw InputError("MultiStateInput: state dimension does not match operators");
    return MultiStateInput{std::move(ops), std::move(states)};
}

namespace {

double real_det(const RealMatrix& m) {
    return linalg::determinant(m.cast<Complex>()).real();
}

// Summed covariance pair over all states of the input.
Covariance summed_covariance(const MultiStateInput& input) {
    const int n = input.ops.size();
    Covariance total{RealMatrix::Zero(n, n), RealMatrix::Zero(n, n)};
    for (const State& s : input.states) {
        Covariance c = covariance_matrix(input.ops, s);
        total.sigma += c.sigma;
        total.kappa += c.kappa;
    }
    return total;
}

GramPath default_path(const State& s) {
    return state_is_pure(s) ? GramPath::PureGram : GramPath::MixedTrace;
}

void validate_gammas(const std::vector<ComplexMatrix>& gammas, const char* who) {
    if (gammas.empty())
        throw InputError(std::string(who) + " requires at least one Gram matrix");
    const Eigen::Index n = gammas[0].rows();
    for (const ComplexMatrix& g : gammas) {
        if (g.rows() != n || g.cols() != n)
            throw InputError(std::string(who) + ": Gram matrices must share one dimension");
        double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
        if (!linalg::is_psd(g, 1e-10 * scale))
            throw InputError(std::string(who) + ": input is not Hermitian PSD");
    }
}

double char_coeff_real(const ComplexMatrix& m, int r) {
    return linalg::char_coeffs(m)[r - 1].real();
}

} // namespace

URVerdict check_robertson(const MultiStateInput& input, double tol) {
    if (input.states.size() != 1)
        throw InputError("check_robertson takes exactly one state");
    input.ops.require_all_hermitian("check_robertson");
    Covariance c = covariance_matrix(input.ops, input.states[0]);
    return make_verdict(RelationId::RUR, real_det(c.sigma), real_det(c.kappa), tol);
}

URVerdict check_schrodinger(const ComplexMatrix& x, const ComplexMatrix& y,
                            const State& state, double tol) {
    OperatorSet ops = OperatorSet::create({x, y});
    ops.require_all_hermitian("check_schrodinger");
    Covariance c = covariance_matrix(ops, state);
    double lhs = c.sigma(0, 0) * c.sigma(1, 1) - c.sigma(0, 1) * c.sigma(0, 1);
    double rhs = c.kappa(0, 1) * c.kappa(0, 1); // = |<[X,Y]>|^2 / 4
    return make_verdict(RelationId::SUR, lhs, rhs, tol);
}

URVerdict check_char_ur_multistate(const MultiStateInput& input, int r, double tol) {
    input.ops.require_all_hermitian("check_char_ur_multistate");
    const int n = input.ops.size();
    if (r < 1 || r > n)
        throw InputError("coefficient order must lie in 1..n");
    Covariance sum = summed_covariance(input);
    double lhs = char_coeff_real(sum.sigma.cast<Complex>(), r);
    double rhs = char_coeff_real(sum.kappa.cast<Complex>(), r);
    return make_verdict(RelationId::EUR1, lhs, rhs, tol, r);
}

URVerdict check_gram_superadditivity(const std::vector<ComplexMatrix>& gammas, int r,
                                     double tol) {
    validate_gammas(gammas, "check_gram_superadditivity");
    const int n = static_cast<int>(gammas[0].rows());
    if (r < 1 || r > n)
        throw InputError("coefficient order must lie in 1..n");
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    double rhs = 0.0;
    for (const ComplexMatrix& g : gammas) {
        sum += g;
        rhs += char_coeff_real(g, r);
    }
    return make_verdict(RelationId::EUR2, char_coeff_real(sum, r), rhs, tol, r);
}

URVerdict check_char_ur_gram(const std::vector<ComplexMatrix>& gammas, int r, double tol) {
    validate_gammas(gammas, "check_char_ur_gram");
    const int n = static_cast<int>(gammas[0].rows());
    if (r < 1 || r > n)
        throw InputError("coefficient order must lie in 1..n");
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (const ComplexMatrix& g : gammas) sum += g;
    uncertainty::SKSplit sk = split_sk(sum);
    double lhs = char_coeff_real(sk.s.cast<Complex>(), r);
    double rhs = char_coeff_real(sk.k.cast<Complex>(), r);
    return make_verdict(RelationId::EUR1, lhs, rhs, tol, r);
}

std::pair<URVerdict, URVerdict> check_minor_urs(const MultiStateInput& input,
                                                const IndexSet& idx, double tol) {
    input.ops.require_all_hermitian("check_minor_urs");
    idx.validate(input.ops.size());
    Covariance sum = summed_covariance(input);

    double m_sigma = linalg::principal_minor(sum.sigma.cast<Complex>(), idx).real();
    double m_kappa = linalg::principal_minor(sum.kappa.cast<Complex>(), idx).real();
    URVerdict first = make_verdict(RelationId::MINOR_SIGMA_KAPPA, m_sigma, m_kappa, tol,
                                   idx.order(), idx);

    // Superadditivity line over R_mu = sigma_mu + i kappa_mu.
    const int n = input.ops.size();
    ComplexMatrix r_sum = ComplexMatrix::Zero(n, n);
    double rhs = 0.0;
    for (const State& s : input.states) {
        Covariance c = covariance_matrix(input.ops, s);
        ComplexMatrix r_mu = c.sigma.cast<Complex>() + Complex(0, 1) * c.kappa.cast<Complex>();
        r_sum += r_mu;
        rhs += linalg::principal_minor(r_mu, idx).real();
    }
    double lhs = linalg::principal_minor(r_sum, idx).real();
    URVerdict second = make_verdict(RelationId::MINOR_GRAM_SUPERADD, lhs, rhs, tol,
                                    idx.order(), idx);
    return {first, second};
}

std::pair<URVerdict, URVerdict> check_minor_gram(const std::vector<ComplexMatrix>& gammas,
                                                 const IndexSet& idx, double tol) {
    validate_gammas(gammas, "check_minor_gram");
    const int n = static_cast<int>(gammas[0].rows());
    idx.validate(n);
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    double rhs = 0.0;
    for (const ComplexMatrix& g : gammas) {
        sum += g;
        rhs += linalg::principal_minor(g, idx).real();
    }
    uncertainty::SKSplit sk = split_sk(sum);
    double m_s = linalg::principal_minor(sk.s.cast<Complex>(), idx).real();
    double m_k = linalg::principal_minor(sk.k.cast<Complex>(), idx).real();
    URVerdict first = make_verdict(RelationId::MINOR_SIGMA_KAPPA, m_s, m_k, tol,
                                   idx.order(), idx);
    URVerdict second = make_verdict(RelationId::MINOR_GRAM_SUPERADD,
                                    linalg::principal_minor(sum, idx).real(), rhs, tol,
                                    idx.order(), idx);
    return {first, second};
}

URVerdict check_entangled_pair(const ComplexMatrix& x, const ComplexMatrix& y,
                               const State& state1, const State& state2, double tol) {
    OperatorSet ops = OperatorSet::create({x, y});
    ops.require_all_hermitian("check_entangled_pair");
    Covariance c1 = covariance_matrix(ops, state1);
    Covariance c2 = covariance_matrix(ops, state2);
    double lhs = 0.5 * (c1.sigma(0, 0) * c2.sigma(1, 1) + c2.sigma(0, 0) * c1.sigma(1, 1)) -
                 std::abs(c1.sigma(0, 1) * c2.sigma(0, 1));
    double rhs = std::abs(c1.kappa(0, 1) * c2.kappa(0, 1));
    return make_verdict(RelationId::SHEUR, lhs, rhs, tol);
}

TwoModeResult check_two_mode_new_ur(const State& state, const std::array<int, 2>& mode_dims,
                                    double tol) {
    const int d1 = mode_dims[0], d2 = mode_dims[1];
    if (d1 < 2 || d2 < 2)
        throw InputError("two-mode check requires mode dims >= 2");
    if (state_dim(state) != d1 * d2)
        throw InputError("two-mode check: state dimension must equal d1 * d2");
    const std::vector<int> dims{d1, d2};

    auto [q1_loc, p1_loc] = states::quadratures(d1);
    auto [q2_loc, p2_loc] = states::quadratures(d2);
    ComplexMatrix q1 = states::embed(q1_loc, 0, dims);
    ComplexMatrix p1 = states::embed(p1_loc, 0, dims);
    ComplexMatrix q2 = states::embed(q2_loc, 1, dims);
    ComplexMatrix p2 = states::embed(p2_loc, 1, dims);

    // Quadrature covariance route.
    OperatorSet quad_ops = OperatorSet::create({q1, q2, p1, p2});
    RealMatrix sig = covariance_matrix(quad_ops, state).sigma;
    const double vq1 = sig(0, 0), vq2 = sig(1, 1), vp1 = sig(2, 2), vp2 = sig(3, 3);
    const double cq1q2 = sig(0, 1), cp1p2 = sig(2, 3);
    const double cq1p2 = sig(0, 3), cq2p1 = sig(1, 2);

    double newur_lhs = (vq1 + vp1) * (vq2 + vp2);
    double newur_rhs = (cq1q2 + cp1p2) * (cq1q2 + cp1p2) +
                       (cq1p2 - cq2p1) * (cq1p2 - cq2p1);

    // Gram route on (a1, a2), symmetrized with the adjoint-set Gram.
    ComplexMatrix a1 = states::embed(states::annihilation_op(d1), 0, dims);
    ComplexMatrix a2 = states::embed(states::annihilation_op(d2), 1, dims);
    GramPath path = default_path(state);
    ComplexMatrix gamma = gram_robertson(OperatorSet::create({a1, a2}), state, path);
    ComplexMatrix gamma_adj =
        gram_robertson(OperatorSet::create({a1.adjoint(), a2.adjoint()}), state, path);
    ComplexMatrix gamma_sym = 0.5 * (gamma + gamma_adj.transpose().eval());
    uncertainty::SKSplit sk = split_sk(gamma_sym);

    double det_s = real_det(sk.s);
    double det_k = real_det(sk.k);

    TwoModeResult out;
    out.new_ur = make_verdict(RelationId::NEWUR, newur_lhs, newur_rhs, tol);
    out.det_s_det_k = make_verdict(RelationId::DETS_DETK, det_s, det_k, tol);
    double det_s_closed =
        ((vq1 + vp1) * (vq2 + vp2) - (cq1q2 + cp1p2) * (cq1q2 + cp1p2)) / 4.0;
    double det_k_closed = (cq1p2 - cq2p1) * (cq1p2 - cq2p1) / 4.0;
    out.det_s_residual = std::abs(det_s - det_s_closed);
    out.det_k_residual = std::abs(det_k - det_k_closed);
    return out;
}

} // namespace urlab::relations
