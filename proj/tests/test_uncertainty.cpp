#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "urlab/uncertainty.hpp"

#include <cmath>

using namespace urlab;
using namespace urlab::uncertainty;
using namespace urlab::states;

namespace {

DensityMatrix projector_of(const PureState& psi) {
    return DensityMatrix::from_matrix(psi.amps * psi.amps.adjoint());
}

} // namespace

TEST_CASE("means of number operators on Fock states") {
    const int dim = 8;
    ComplexMatrix a = annihilation_op(dim);
    ComplexMatrix number = a.adjoint() * a;
    for (int n = 0; n < dim; ++n) {
        PureState psi = fock_state(n, dim);
        CHECK(mean(number, psi).real() == doctest::Approx(double(n)));
        CHECK(std::abs(mean(number, psi).imag()) < 1e-14);
        CHECK(std::abs(mean(number, projector_of(psi)) - mean(number, psi)) < 1e-13);
    }
    CHECK_THROWS_AS(mean(annihilation_op(4), fock_state(0, 8)), InputError);
}

TEST_CASE("quadrature Gram matrix in the vacuum") {
    const int dim = 8;
    auto [q, p] = quadratures(dim);
    OperatorSet ops = OperatorSet::create({q, p});
    State vac = fock_state(0, dim);

    ComplexMatrix gamma = gram_robertson(ops, vac, GramPath::PureGram);
    ComplexMatrix expected(2, 2);
    expected << Complex(0.5), Complex(0, 0.5),
                Complex(0, -0.5), Complex(0.5);
    CHECK((gamma - expected).cwiseAbs().maxCoeff() < 1e-14);

    // both mixed paths agree on the projector
    State proj = projector_of(fock_state(0, dim));
    ComplexMatrix via_trace = gram_robertson(ops, proj, GramPath::MixedTrace);
    ComplexMatrix via_hs = gram_robertson(ops, proj, GramPath::MixedHS);
    CHECK((via_trace - expected).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((via_hs - expected).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("spin-1/2 Gram matrix in the maximally mixed state") {
    auto [jx, jy, jz] = spin_ops(1);
    OperatorSet ops = OperatorSet::create({jx, jy});
    State mixed = DensityMatrix::from_matrix(0.5 * ComplexMatrix::Identity(2, 2));

    ComplexMatrix gamma = gram_robertson(ops, mixed, GramPath::MixedTrace);
    CHECK(gamma(0, 0).real() == doctest::Approx(0.25));
    CHECK(gamma(1, 1).real() == doctest::Approx(0.25));
    CHECK(std::abs(gamma(0, 1)) < 1e-14);
}

TEST_CASE("the three Gram paths agree on random inputs") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const int dim = 3 + static_cast<int>(seed % 3);
        std::vector<ComplexMatrix> mats;
        for (int i = 0; i < 3; ++i)
            mats.push_back(random_operator(dim, 100 * seed + i));
        OperatorSet ops = OperatorSet::create(mats);

        State pure = random_pure(dim, 200 + seed);
        ComplexMatrix g_pure = gram_robertson(ops, pure, GramPath::PureGram);
        State as_density = DensityMatrix::from_matrix(
            std::get<PureState>(pure).amps * std::get<PureState>(pure).amps.adjoint());
        ComplexMatrix g_trace = gram_robertson(ops, as_density, GramPath::MixedTrace);
        ComplexMatrix g_hs = gram_robertson(ops, as_density, GramPath::MixedHS);
        CHECK((g_pure - g_trace).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((g_pure - g_hs).cwiseAbs().maxCoeff() < 1e-10);

        State mixed = random_density(dim, dim - 1, 300 + seed);
        ComplexMatrix m_trace = gram_robertson(ops, mixed, GramPath::MixedTrace);
        ComplexMatrix m_hs = gram_robertson(ops, mixed, GramPath::MixedHS);
        CHECK((m_trace - m_hs).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("the pure path refuses density matrices") {
    OperatorSet ops = OperatorSet::create({random_hermitian(3, 5)});
    State mixed = DensityMatrix::from_matrix(ComplexMatrix::Identity(3, 3) / 3.0);
    CHECK_THROWS_AS(gram_robertson(ops, mixed, GramPath::PureGram), InputError);
}

TEST_CASE("split_sk gives an exact additive decomposition") {
    OperatorSet ops = OperatorSet::create(
        {random_hermitian(4, 61), random_hermitian(4, 62), random_hermitian(4, 63)});
    State psi = random_pure(4, 64);
    ComplexMatrix gamma = gram_robertson(ops, psi, GramPath::PureGram);
    SKSplit sk = split_sk(gamma);
    ComplexMatrix rebuilt = sk.s.cast<Complex>() + Complex(0, 1) * sk.k.cast<Complex>();
    CHECK((rebuilt - gamma).cwiseAbs().maxCoeff() == 0.0);
    CHECK((sk.s - sk.s.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((sk.k + sk.k.transpose()).cwiseAbs().maxCoeff() < 1e-12);

    ComplexMatrix not_hermitian = random_operator(3, 65);
    CHECK_THROWS_AS(split_sk(not_hermitian), InputError);
}

TEST_CASE("covariance matrices of the quadratures on low Fock states") {
    const int dim = 8;
    auto [q, p] = quadratures(dim);
    OperatorSet ops = OperatorSet::create({q, p});

    Covariance vac = covariance_matrix(ops, fock_state(0, dim));
    CHECK(vac.sigma(0, 0) == doctest::Approx(0.5));
    CHECK(vac.sigma(1, 1) == doctest::Approx(0.5));
    CHECK(std::abs(vac.sigma(0, 1)) < 1e-14);
    CHECK(vac.kappa(0, 1) == doctest::Approx(0.5));
    CHECK(vac.kappa(1, 0) == doctest::Approx(-0.5));
    CHECK(vac.kappa(0, 0) == 0.0);

    Covariance one = covariance_matrix(ops, fock_state(1, dim));
    CHECK(one.sigma(0, 0) == doctest::Approx(1.5));
    CHECK(one.sigma(1, 1) == doctest::Approx(1.5));
    CHECK(one.kappa(0, 1) == doctest::Approx(0.5));

    OperatorSet with_nonhermitian = OperatorSet::create({q, annihilation_op(dim)});
    CHECK_THROWS_AS(covariance_matrix(with_nonhermitian, fock_state(0, dim)), InputError);
}

TEST_CASE("covariance route matches the Gram route for Hermitian sets") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const int dim = 2 + static_cast<int>(seed);
        std::vector<ComplexMatrix> mats;
        for (int i = 0; i < 3; ++i)
            mats.push_back(random_hermitian(dim, 700 * seed + i));
        OperatorSet ops = OperatorSet::create(mats);

        State psi = random_pure(dim, 800 + seed);
        Covariance cov = covariance_matrix(ops, psi);
        UncertaintyData data = uncertainty_data(ops, psi, GramPath::PureGram);
        CHECK((cov.sigma - data.s).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((cov.kappa - data.k).cwiseAbs().maxCoeff() < 1e-10);

        State rho = random_density(dim, 1 + static_cast<int>(seed % dim), 900 + seed);
        Covariance cov_m = covariance_matrix(ops, rho);
        UncertaintyData data_m = uncertainty_data(ops, rho, GramPath::MixedTrace);
        CHECK((cov_m.sigma - data_m.s).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((cov_m.kappa - data_m.k).cwiseAbs().maxCoeff() < 1e-10);
    }
}
