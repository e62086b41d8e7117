// End-to-end acceptance sweep. Each criterion prints one [PASS]/[FAIL] line;
// the binary exits nonzero if any line failed.

#include "urlab/fuzz.hpp"
#include "urlab/grid.hpp"
#include "urlab/linalg.hpp"
#include "urlab/relations.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace urlab;
using namespace urlab::relations;
using namespace urlab::states;
using uncertainty::Covariance;
using uncertainty::GramPath;
using uncertainty::SKSplit;

namespace {

struct Criterion {
    bool ok = true;
    std::string first_failure;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

int g_failures = 0;

void print_result(int idx, const std::string& label, const Criterion& c) {
    if (c.ok) {
        std::printf("[PASS] criterion %d: %s\n", idx, label.c_str());
    } else {
        std::printf("[FAIL] criterion %d: %s (%s)\n", idx, label.c_str(),
                    c.first_failure.c_str());
        ++g_failures;
    }
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// ---- 1: quadrature determinants in the vacuum --------------------------------

Criterion criterion_vacuum_determinants() {
    Criterion c;
    const int dim = 8;
    auto [q, p] = quadratures(dim);
    auto input = MultiStateInput::create(OperatorSet::create({q, p}),
                                         {fock_state(0, dim)});
    URVerdict v = check_robertson(input);
    c.require(std::abs(v.lhs - 0.25) <= 1e-12, "det sigma != 1/4");
    c.require(std::abs(v.rhs - 0.25) <= 1e-12, "det kappa != 1/4");
    c.require(std::abs(v.margin) <= 1e-12, "margin not saturated");
    c.require(v.pass, "verdict failed");

    // coherent states keep the product form saturated too
    auto [q40, p40] = quadratures(40);
    URVerdict s =
        check_schrodinger(q40, p40, coherent_state(Complex(1.3, -0.8), 40));
    c.require(std::abs(s.margin) <= 1e-8, "coherent-state margin above 1e-8");
    c.require(s.pass, "coherent-state verdict failed");
    return c;
}

// ---- 2: spin-1/2 coefficient values ------------------------------------------

Criterion criterion_spin_coefficients() {
    Criterion c;
    auto [jx, jy, jz] = spin_ops(1);
    ComplexVector up(2);
    up << 1.0, 0.0;
    auto input = MultiStateInput::create(OperatorSet::create({jx, jy, jz}),
                                         {PureState::from_vector(up)});

    URVerdict r2 = check_char_ur_multistate(input, 2);
    c.require(std::abs(r2.lhs - 1.0 / 16.0) <= 1e-12, "C_2 of sigma != 1/16");
    c.require(std::abs(r2.rhs - 1.0 / 16.0) <= 1e-12, "C_2 of kappa != 1/16");
    c.require(r2.pass, "order-2 verdict failed");

    URVerdict r3 = check_char_ur_multistate(input, 3);
    c.require(std::abs(r3.lhs) <= 1e-12, "C_3 of sigma != 0");
    c.require(std::abs(r3.rhs) <= 1e-12, "C_3 of kappa != 0");
    c.require(r3.pass, "order-3 verdict failed");
    return c;
}

// ---- 3: randomized sweep volume ----------------------------------------------

Criterion criterion_fuzz_volume(double* seconds_out) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();

    fuzz::FuzzParams pure;
    pure.trials = 10000;
    pure.seed = 101;
    pure.max_dim = 8;
    pure.max_ops = 4;
    pure.max_states = 3;
    pure.threads = 4;
    report::VerdictReport pure_rep = fuzz::run_fuzz(pure);
    c.require(pure_rep.failed == 0, "pure sweep saw violations");

    fuzz::FuzzParams mixed = pure;
    mixed.trials = 2000;
    mixed.seed = 202;
    mixed.mixed = true;
    report::VerdictReport mixed_rep = fuzz::run_fuzz(mixed);
    c.require(mixed_rep.failed == 0, "mixed sweep saw violations");

    fuzz::FuzzParams nonherm = pure;
    nonherm.trials = 2000;
    nonherm.seed = 303;
    nonherm.nonhermitian = true;
    report::VerdictReport nonherm_rep = fuzz::run_fuzz(nonherm);
    c.require(nonherm_rep.failed == 0, "non-Hermitian sweep saw violations");

    auto t1 = std::chrono::steady_clock::now();
    double seconds = std::chrono::duration<double>(t1 - t0).count();
    *seconds_out = seconds;
    c.require(seconds < 120.0, "sweeps took " + std::to_string(seconds) + "s");
    return c;
}

// ---- 4: agreement of the independent computation routes ----------------------

Criterion criterion_route_agreement() {
    Criterion c;
    const std::uint64_t master = 0xA4;
    std::uint64_t counter = 0;
    auto next = [&] { return derive_seed(master, counter++); };

    for (int trial = 0; trial < 1000 && c.ok; ++trial) {
        std::mt19937_64 rng(next());
        std::uniform_int_distribution<int> dim_dist(2, 8);
        std::uniform_int_distribution<int> n_dist(1, 4);
        const int dim = dim_dist(rng);
        const int n = n_dist(rng);
        const bool hermitian_set = trial % 2 == 0;

        std::vector<ComplexMatrix> mats;
        for (int i = 0; i < n; ++i)
            mats.push_back(hermitian_set ? random_hermitian(dim, next())
                                         : random_operator(dim, next()));
        OperatorSet ops = OperatorSet::create(mats);

        const bool pure = trial % 3 != 0;
        State state;
        if (pure) {
            state = random_pure(dim, next());
        } else {
            std::uniform_int_distribution<int> rank_dist(1, dim);
            state = random_density(dim, rank_dist(rng), next());
        }
        ComplexMatrix as_density = state_density(state);
        State dm = DensityMatrix::from_matrix(
            0.5 * (as_density + as_density.adjoint().eval()));

        ComplexMatrix via_trace = uncertainty::gram_robertson(ops, dm, GramPath::MixedTrace);
        ComplexMatrix via_hs = uncertainty::gram_robertson(ops, dm, GramPath::MixedHS);
        c.require(max_abs(via_trace - via_hs) <= 1e-10,
                  "trace and square-root Gram paths disagree");

        if (pure) {
            ComplexMatrix via_pure =
                uncertainty::gram_robertson(ops, state, GramPath::PureGram);
            c.require(max_abs(via_pure - via_trace) <= 1e-10,
                      "pure and trace Gram paths disagree");
        }

        if (hermitian_set) {
            Covariance cov = uncertainty::covariance_matrix(ops, state);
            SKSplit sk = uncertainty::split_sk(
                uncertainty::gram_robertson(ops, state,
                                            pure ? GramPath::PureGram
                                                 : GramPath::MixedTrace));
            c.require((cov.sigma - sk.s).cwiseAbs().maxCoeff() <= 1e-10,
                      "sigma and S routes disagree");
            c.require((cov.kappa - sk.k).cwiseAbs().maxCoeff() <= 1e-10,
                      "kappa and K routes disagree");
        }

        // quadrature commutator oracle away from the truncation edge
        if (trial % 10 == 0) {
            const int big = 8;
            auto [q, p] = quadratures(big);
            ComplexVector low = random_pure(big - 2, next()).amps;
            ComplexVector padded = ComplexVector::Zero(big);
            padded.head(big - 2) = low;
            OperatorSet quad = OperatorSet::create({q, p});
            Covariance cov =
                uncertainty::covariance_matrix(quad, PureState::from_vector(padded));
            c.require(std::abs(cov.kappa(0, 1) - 0.5) <= 1e-12,
                      "quadrature commutator mean drifted");
        }
    }
    return c;
}

// ---- 5: two-mode routes ------------------------------------------------------

Criterion criterion_two_mode() {
    Criterion c;
    const std::uint64_t master = 0xB5;
    for (int trial = 0; trial < 500 && c.ok; ++trial) {
        const int d = (trial % 2 == 0) ? 4 : 6;
        State psi = random_pure(d * d, derive_seed(master, trial));
        TwoModeResult res = check_two_mode_new_ur(psi, {d, d});
        c.require(res.det_s_residual <= 1e-10, "det S residual too large");
        c.require(res.det_k_residual <= 1e-10, "det K residual too large");
        c.require(res.new_ur.margin >= -1e-10 * res.new_ur.scale,
                  "quadrature inequality violated");
        c.require(res.det_s_det_k.pass, "det S >= det K violated");
        double mismatch = std::abs(res.new_ur.margin - 4.0 * res.det_s_det_k.margin);
        c.require(mismatch <= 1e-10 * std::max(1.0, std::abs(res.new_ur.margin)),
                  "margin factor between the two routes broke");
    }
    return c;
}

// ---- 6: paired-state inequality ----------------------------------------------

Criterion criterion_paired_states() {
    Criterion c;
    const std::uint64_t master = 0xC6;
    std::uint64_t counter = 0;
    auto next = [&] { return derive_seed(master, counter++); };

    for (int trial = 0; trial < 1000 && c.ok; ++trial) {
        std::mt19937_64 rng(next());
        std::uniform_int_distribution<int> dim_dist(2, 8);
        const int dim = dim_dist(rng);
        ComplexMatrix x = random_hermitian(dim, next());
        ComplexMatrix y = random_hermitian(dim, next());
        State s1 = random_pure(dim, next());
        State s2 = random_pure(dim, next());
        URVerdict pair = check_entangled_pair(x, y, s1, s2);
        c.require(pair.pass, "paired-state inequality violated");

        URVerdict same = check_entangled_pair(x, y, s1, s1);
        URVerdict single = check_schrodinger(x, y, s1);
        c.require(std::abs(same.margin - single.margin) <= 1e-12,
                  "identical-state reduction drifted");
    }

    // the inequality survives mixing one side of the pair
    for (int trial = 0; trial < 250 && c.ok; ++trial) {
        std::mt19937_64 rng(next());
        std::uniform_int_distribution<int> dim_dist(2, 8);
        const int dim = dim_dist(rng);
        std::uniform_int_distribution<int> rank_dist(1, dim);
        ComplexMatrix x = random_hermitian(dim, next());
        ComplexMatrix y = random_hermitian(dim, next());
        State s1 = random_pure(dim, next());
        State s2 = random_density(dim, rank_dist(rng), next());
        c.require(check_entangled_pair(x, y, s1, s2).pass,
                  "mixed-pair inequality violated");
    }
    return c;
}

// ---- 7: grid refinement study ------------------------------------------------

Criterion criterion_grid_study() {
    Criterion c;
    const std::vector<int> levels{129, 257, 513, 1025};

    grid::DivergenceStudy tri =
        grid::kink_divergence_study(grid::triangle_function(), -1.0, 1.0, levels);
    c.require(tri.product_form == grid::Convergence::Divergent,
              "kink squared-stencil line not flagged divergent");
    c.require(tri.generalized == grid::Convergence::Convergent,
              "kink derivative-free line not flagged convergent");
    c.require(std::abs(tri.levels.back().generalized_var_p - 3.0) <= 0.03,
              "triangle momentum variance missed 3 by more than 1%");
    for (std::size_t i = 0; i + 1 < tri.levels.size(); ++i)
        c.require(tri.levels[i + 1].p2_norm_sq / tri.levels[i].p2_norm_sq >= 1.9,
                  "squared-stencil norm grew too slowly");

    grid::DivergenceStudy gauss =
        grid::kink_divergence_study(grid::gaussian_function(), -8.0, 8.0, levels);
    c.require(gauss.product_form == grid::Convergence::Convergent,
              "gaussian squared-stencil line not convergent");
    c.require(gauss.generalized == grid::Convergence::Convergent,
              "gaussian derivative-free line not convergent");
    for (std::size_t i = 0; i + 2 < gauss.levels.size(); ++i) {
        double d1 = std::abs(gauss.levels[i].p2_norm_sq - gauss.levels[i + 1].p2_norm_sq);
        double d2 =
            std::abs(gauss.levels[i + 1].p2_norm_sq - gauss.levels[i + 2].p2_norm_sq);
        c.require(d2 > 0.0 && d1 / d2 >= 3.0,
                  "gaussian control not converging at second order");
    }
    return c;
}

// ---- 8: reproducibility ------------------------------------------------------

Criterion criterion_reproducibility() {
    Criterion c;
    fuzz::FuzzParams params;
    params.trials = 500;
    params.seed = 20250817;
    params.max_dim = 8;
    params.max_ops = 4;
    params.max_states = 3;
    params.threads = 1;

    std::string first = report::serialize(fuzz::run_fuzz(params));
    std::string second = report::serialize(fuzz::run_fuzz(params));
    c.require(first == second, "same-thread reruns differ");

    params.threads = 4;
    std::string threaded = report::serialize(fuzz::run_fuzz(params));
    c.require(threaded == first, "thread count leaked into the report");

    params.mixed = true;
    std::string mixed_a = report::serialize(fuzz::run_fuzz(params));
    params.threads = 1;
    std::string mixed_b = report::serialize(fuzz::run_fuzz(params));
    c.require(mixed_a == mixed_b, "mixed-state sweep not schedule independent");
    return c;
}

} // namespace

int main() {
    print_result(1, "vacuum and coherent quadrature witnesses saturate",
           criterion_vacuum_determinants());
    print_result(2, "spin-1/2 coefficient values at orders 2 and 3",
           criterion_spin_coefficients());

    double sweep_seconds = 0.0;
    Criterion fuzz_c = criterion_fuzz_volume(&sweep_seconds);
    char label[128];
    std::snprintf(label, sizeof(label),
                  "14000 randomized trials with zero violations (%.1fs)", sweep_seconds);
    print_result(3, label, fuzz_c);

    print_result(4, "independent Gram / covariance routes agree to 1e-10",
           criterion_route_agreement());
    print_result(5, "two-mode inequality matches its determinant form",
           criterion_two_mode());
    print_result(6, "paired-state inequality holds and reduces correctly",
           criterion_paired_states());
    print_result(7, "grid refinement separates the kink from the smooth control",
           criterion_grid_study());
    print_result(8, "reports are byte-identical across reruns and thread counts",
           criterion_reproducibility());

    if (g_failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria failed\n", g_failures);
    return 1;
}
