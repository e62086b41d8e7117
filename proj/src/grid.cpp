#include "urlab/grid.hpp"

#include <algorithm>
#include <cmath>

namespace urlab::grid {

GridWavefunction GridWavefunction::sample(const ScalarFunction& f, double x_min,
                                          double x_max, int n_points) {
    if (!(x_max > x_min)) throw InputError("grid requires x_max > x_min");
    if (n_points < 3) throw InputError("grid requires at least 3 points");
    GridWavefunction w;
    w.x_min = x_min;
    w.x_max = x_max;
    w.h = (x_max - x_min) / (n_points - 1);
    w.values.resize(n_points);
    for (int i = 0; i < n_points; ++i)
        w.values[i] = f(w.x(i));
    double norm_sq = 0.0;
    for (int i = 0; i < n_points; ++i) {
        double wt = (i == 0 || i == n_points - 1) ? 0.5 : 1.0;
        norm_sq += wt * std::norm(w.values[i]) * w.h;
    }
    if (norm_sq <= 0.0) throw InputError("cannot normalize an identically zero function");
    w.values /= std::sqrt(norm_sq);
    if (std::abs(w.values[0]) >= 1e-8 || std::abs(w.values[n_points - 1]) >= 1e-8)
        throw InputError("wavefunction must decay below 1e-8 at the grid edges");
    return w;
}

Complex grid_inner(const GridWavefunction& psi, const ComplexVector& u,
                   const ComplexVector& v) {
    const int n = psi.size();
    if (u.size() != n || v.size() != n)
        throw InputError("grid_inner: vector size does not match the grid");
    Complex acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double wt = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        acc += wt * std::conj(u[i]) * v[i];
    }
    return acc * psi.h;
}

GridOperator GridOperator::multiply(std::function<double(double)> f) {
    GridOperator op;
    op.kind_ = Kind::Multiply;
    op.multiplier_ = std::move(f);
    return op;
}

GridOperator GridOperator::first_deriv() {
    GridOperator op;
    op.kind_ = Kind::FirstDeriv;
    return op;
}

GridOperator GridOperator::second_deriv() {
    GridOperator op;
    op.kind_ = Kind::SecondDeriv;
    return op;
}

ComplexVector GridOperator::apply(const GridWavefunction& psi) const {
    const int n = psi.size();
    const auto& v = psi.values;
    ComplexVector out(n);
    switch (kind_) {
        case Kind::Multiply:
            for (int i = 0; i < n; ++i)
                out[i] = multiplier_(psi.x(i)) * v[i];
            break;
        case Kind::FirstDeriv: {
            const Complex mi(0, -1); // momentum = -i d/dx
            out[0] = mi * (v[1] - v[0]) / psi.h;
            out[n - 1] = mi * (v[n - 1] - v[n - 2]) / psi.h;
            for (int i = 1; i < n - 1; ++i)
                out[i] = mi * (v[i + 1] - v[i - 1]) / (2.0 * psi.h);
            break;
        }
        case Kind::SecondDeriv: {
            const double h2 = psi.h * psi.h;
            for (int i = 0; i < n; ++i) {
                Complex left = (i > 0) ? v[i - 1] : Complex(0.0);
                Complex right = (i < n - 1) ? v[i + 1] : Complex(0.0);
                out[i] = -(right - 2.0 * v[i] + left) / h2; // -d^2/dx^2
            }
            break;
        }
    }
    return out;
}

double GridOperator::mean(const GridWavefunction& psi) const {
    return grid_inner(psi, psi.values, apply(psi)).real();
}

double generalized_covariance(const GridOperator& x, const GridOperator& y,
                              const GridWavefunction& psi) {
    ComplexVector u = x.apply(psi);
    ComplexVector v = y.apply(psi);
    return grid_inner(psi, u, v).real() - x.mean(psi) * y.mean(psi);
}

double product_form_covariance(const GridOperator& x, const GridOperator& y,
                               const GridWavefunction& psi) {
    GridWavefunction tmp = psi;
    tmp.values = y.apply(psi);
    ComplexVector xy = x.apply(tmp);
    tmp.values = x.apply(psi);
    ComplexVector yx = y.apply(tmp);
    double sym = 0.5 * (grid_inner(psi, psi.values, xy).real() +
                        grid_inner(psi, psi.values, yx).real());
    return sym - x.mean(psi) * y.mean(psi);
}

const char* convergence_name(Convergence c) {
    switch (c) {
        case Convergence::Convergent: return "CONVERGENT";
        case Convergence::Divergent: return "DIVERGENT";
        case Convergence::Undetermined: return "UNDETERMINED";
    }
    return "UNDETERMINED";
}

namespace {

Convergence classify(const std::vector<double>& v) {
    bool all_growing = true;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (std::abs(v[i]) < 1e-300 || v[i + 1] / v[i] < 1.9) {
            all_growing = false;
            break;
        }
    }
    if (all_growing) return Convergence::Divergent;
    const double last = v[v.size() - 1];
    const double prev = v[v.size() - 2];
    double denom = std::max({std::abs(last), std::abs(prev), 1e-12});
    if (std::abs(last - prev) < 0.01 * denom) return Convergence::Convergent;
    return Convergence::Undetermined;
}

} // namespace

DivergenceStudy kink_divergence_study(const ScalarFunction& f, double x_min, double x_max,
                                      const std::vector<int>& levels) {
    if (levels.size() < 3)
        throw InputError("divergence study needs at least 3 refinement levels");
    for (std::size_t i = 0; i + 1 < levels.size(); ++i)
        if (levels[i + 1] <= levels[i])
            throw InputError("refinement levels must be strictly increasing");

    DivergenceStudy study;
    const GridOperator p = GridOperator::first_deriv();
    const GridOperator p2 = GridOperator::second_deriv();
    std::vector<double> norms, vars;
    for (int n : levels) {
        GridWavefunction psi = GridWavefunction::sample(f, x_min, x_max, n);
        ComplexVector p2psi = p2.apply(psi);
        RefinementLevel lvl;
        lvl.n_points = n;
        lvl.h = psi.h;
        lvl.p2_norm_sq = grid_inner(psi, p2psi, p2psi).real();
        lvl.generalized_var_p = generalized_covariance(p, p, psi);
        norms.push_back(lvl.p2_norm_sq);
        vars.push_back(lvl.generalized_var_p);
        study.levels.push_back(lvl);
    }
    study.product_form = classify(norms);
    study.generalized = classify(vars);
    return study;
}

ScalarFunction triangle_function(double kink_offset) {
    if (std::abs(kink_offset) >= 1.0)
        throw InputError("triangle kink offset must lie strictly inside (-1, 1)");
    return [kink_offset](double x) -> Complex {
        if (x <= -1.0 || x >= 1.0) return 0.0;
        if (x <= kink_offset) return (x + 1.0) / (kink_offset + 1.0);
        return (1.0 - x) / (1.0 - kink_offset);
    };
}

ScalarFunction gaussian_function() {
    return [](double x) -> Complex { return std::exp(-0.5 * x * x); };
}

} // namespace urlab::grid
