#pragma once

#include "urlab/types.hpp"

#include <functional>

namespace urlab::grid {

using ScalarFunction = std::function<Complex(double)>;

// Uniformly sampled wavefunction, trapezoid-normalized. Samples must decay
// below 1e-8 at both edges (Dirichlet-style truncation of the line).
struct GridWavefunction {
    double x_min = 0.0;
    double x_max = 0.0;
    double h = 0.0;
    ComplexVector values;

    int size() const { return static_cast<int>(values.size()); }
    double x(int i) const { return x_min + i * h; }

    static GridWavefunction sample(const ScalarFunction& f, double x_min, double x_max,
                                   int n_points);
};

// Trapezoid inner product <u|v> over the wavefunction's grid.
Complex grid_inner(const GridWavefunction& psi, const ComplexVector& u,
                   const ComplexVector& v);

// Grid observables. FirstDeriv applies the momentum -i d/dx via the central
// difference (one-sided O(h) at the edges); SecondDeriv applies the squared
// momentum -d^2/dx^2 via the 3-point stencil with zero padding; Multiply
// applies a real-valued multiplier pointwise.
class GridOperator {
  public:
    enum class Kind { Multiply, FirstDeriv, SecondDeriv };

    static GridOperator multiply(std::function<double(double)> f);
    static GridOperator first_deriv();
    static GridOperator second_deriv();

    Kind kind() const { return kind_; }
    ComplexVector apply(const GridWavefunction& psi) const;
    double mean(const GridWavefunction& psi) const;

  private:
    Kind kind_ = Kind::Multiply;
    std::function<double(double)> multiplier_;
};

// Re<X psi|Y psi> - <X><Y>. Defined whenever X psi and Y psi are on the grid,
// no operator product needed.
double generalized_covariance(const GridOperator& x, const GridOperator& y,
                              const GridWavefunction& psi);

// Re<psi|(XY + YX)/2 psi> - <X><Y>, composing the stencils as given. This
// demands psi stay in the composed operator's domain; on a kink it does not.
double product_form_covariance(const GridOperator& x, const GridOperator& y,
                               const GridWavefunction& psi);

enum class Convergence { Convergent, Divergent, Undetermined };

const char* convergence_name(Convergence c);

struct RefinementLevel {
    int n_points = 0;
    double h = 0.0;
    double p2_norm_sq = 0.0;        // || p^2 psi_h ||^2, 3-point stencil
    double generalized_var_p = 0.0; // generalized (dp)^2
};

struct DivergenceStudy {
    std::vector<RefinementLevel> levels;
    Convergence product_form = Convergence::Undetermined;
    Convergence generalized = Convergence::Undetermined;
};

// Refinement study over strictly increasing grid sizes (>= 3 of them):
// per level, || p^2 psi ||^2 and the generalized (dp)^2. Classification is
// ratio-based: Divergent when every successive value ratio is >= 1.9,
// otherwise Convergent when the last relative change is < 1%. The verdicts
// are relative to the fixed stencils above.
DivergenceStudy kink_divergence_study(const ScalarFunction& f, double x_min, double x_max,
                                      const std::vector<int>& levels);

// Reference functions for demos and tests.
ScalarFunction triangle_function(double kink_offset = 0.0); // support [-1,1], kink at offset
ScalarFunction gaussian_function();                         // exp(-x^2/2), use on [-8,8]

} // namespace urlab::grid
